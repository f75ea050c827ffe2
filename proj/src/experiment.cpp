#include "mepnet/experiment.hpp"

#include "mepnet/paths.hpp"
#include "mepnet/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>

namespace mepnet
{

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

namespace
{

constexpr std::size_t kUnbounded = std::numeric_limits<std::int32_t>::max();

int
margin_for(const ExperimentConfig& cfg)
{
    return cfg.interior_margin > 0 ? cfg.interior_margin : cfg.l0_max + 4;
}

NetworkGraph
build_network(const ExperimentConfig& cfg, TopologyKind topology, std::uint64_t seed)
{
    switch (topology) {
    case TopologyKind::kRN:
        return build_random(cfg.n_nodes, cfg.target_edges, seed);
    case TopologyKind::kBAN: {
        const auto attach = static_cast<std::size_t>(
            std::llround(static_cast<double>(cfg.target_edges) / static_cast<double>(cfg.n_nodes)));
        return build_barabasi_albert(cfg.n_nodes, std::max<std::size_t>(attach, 1), seed);
    }
    case TopologyKind::kTLN:
    case TopologyKind::kSLN:
    case TopologyKind::kHLN:
        return build_lattice(topology, cfg.lattice_rows, cfg.lattice_cols, margin_for(cfg));
    }
    throw std::logic_error("unreachable topology");
}

std::size_t
path_budget(const ExperimentConfig& cfg, TopologyKind topology)
{
    const PathBudget b = cfg.k_paths.at(topology);
    if (!b.all)
        return static_cast<std::size_t>(b.count);
    return is_lattice(topology) ? static_cast<std::size_t>(lattice_degree(topology)) : kUnbounded;
}

/// Path sets for every pair, computed on `threads` workers over fixed index ranges.
std::vector<PathSet>
extract_paths(const NetworkGraph& g,
              const std::vector<std::pair<NodeId, NodeId>>& pairs,
              std::size_t k,
              unsigned threads)
{
    std::vector<PathSet> out(pairs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        PathFinder finder(g);
        for (std::size_t i = begin; i < end; i++)
            out[i] = finder.edge_disjoint_paths(pairs[i].first, pairs[i].second, k);
    };

    const std::size_t n = pairs.size();
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
    if (workers == 1) {
        work(0, n);
        return out;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; w++) {
        const std::size_t begin = std::min(n, w * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                work(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    return out;
}

/// Final concurrence per pair; pairs the strategy cannot serve are skipped.
std::vector<double>
evaluate(const std::vector<PathSet>& sets, const Strategy& strategy, std::size_t k, kernels::FoldOptions fold)
{
    std::vector<double> values;
    if (strategy.kind() == StrategyKind::kBaseline) {
        values.reserve(sets.size());
        for (const PathSet& ps : sets)
            values.push_back(ps.paths.front().concurrence.value());
        return values;
    }

    if (strategy.kind() == StrategyKind::kCustom)
        k = strategy.permutation().size();

    std::vector<std::vector<std::size_t>> orders;
    std::vector<const PathSet*> used;
    std::size_t slots = 1;
    for (const PathSet& ps : sets) {
        if (strategy.kind() == StrategyKind::kCustom && ps.size() < k)
            continue;
        orders.push_back(order_paths(ps, strategy, k));
        used.push_back(&ps);
        slots = std::max(slots, orders.back().size());
    }

    const std::size_t n = used.size();
    std::vector<double> paths(slots * n, 1.0);
    std::vector<std::int32_t> counts(n);
    for (std::size_t i = 0; i < n; i++) {
        const auto& order = orders[i];
        counts[i] = static_cast<std::int32_t>(order.size());
        for (std::size_t s = 0; s < order.size(); s++)
            paths[s * n + i] = used[i]->paths[order[s]].concurrence.value();
    }
    values.resize(n);
    kernels::pump_fold_batch(paths, slots, counts, values, fold);
    return values;
}

AggregateRow
aggregate(const std::vector<double>& values)
{
    // shifted by the first sample: exact for constant data, stable otherwise
    AggregateRow row;
    row.n_samples = values.size();
    const double shift = values.front();
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values)
        sum += v - shift;
    const double offset = sum / n;
    row.mean_concurrence = shift + offset;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values)
            ss += (v - shift - offset) * (v - shift - offset);
        row.std_dev = std::sqrt(ss / (n - 1.0));
    }
    return row;
}

std::string
format_row(const AggregateRow& r)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%.9g,%.9g,%zu,%llu", std::string(topology_name(r.topology)).c_str(),
                  r.strategy.c_str(), r.k, r.l0, r.mean_concurrence, r.std_dev, r.n_samples,
                  static_cast<unsigned long long>(r.seed));
    return buf;
}

std::vector<std::string_view>
split_commas(std::string_view line)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = line.find(',');
        out.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos)
            return out;
        line.remove_prefix(comma + 1);
    }
}

template <typename T>
T
parse_field(std::string_view text, std::size_t line_no, std::string_view column)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw CsvError("line " + std::to_string(line_no) + ", column '" + std::string(column) + "': cannot parse '"
                       + std::string(text) + "'");
    return value;
}

}  // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

void
ExperimentConfig::validate() const
{
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (topologies.empty())
        fail("topologies: at least one topology required");
    if (l0_min < 1 || l0_max > 20 || l0_min > l0_max)
        fail("l0_range: must satisfy 1 <= l0_min <= l0_max <= 20");
    if (n_sources < 1)
        fail("n_sources: must be positive");
    if (n_dests < 1)
        fail("n_dests: must be positive");
    if (n_graph_realizations < 1)
        fail("realizations: must be positive");
    if (strategies.empty())
        fail("strategies: at least one strategy required");
    if (interior_margin < 0)
        fail("interior_margin: must be >= 0");
    for (TopologyKind t : topologies) {
        const auto it = k_paths.find(t);
        if (it == k_paths.end())
            fail("paths.k_" + std::string(topology_name(t)) + ": missing path budget");
        if (!it->second.all && it->second.count < 1)
            fail("paths.k_" + std::string(topology_name(t)) + ": must be positive or 'all'");
        if (is_lattice(t)) {
            if (lattice_rows < 3 || lattice_cols < 3)
                fail("lattice_rows/lattice_cols: must be >= 3");
        } else {
            if (n_nodes < 2)
                fail("nodes: must be >= 2");
            if (target_edges < 1)
                fail("edges: must be positive");
        }
    }
}

int
k_label(const ExperimentConfig& cfg, TopologyKind topology)
{
    const PathBudget b = cfg.k_paths.at(topology);
    if (!b.all)
        return b.count;
    return is_lattice(topology) ? lattice_degree(topology) : 0;
}

ExperimentResult
run_experiment(const ExperimentConfig& cfg, unsigned threads)
{
    cfg.validate();

    std::vector<Strategy> strategies = cfg.strategies;
    if (std::find(strategies.begin(), strategies.end(), Strategy::baseline()) == strategies.end())
        strategies.push_back(Strategy::baseline());

    ExperimentResult result;
    for (TopologyKind topology : cfg.topologies) {
        const auto topo_tag = static_cast<std::uint64_t>(topology);
        const std::size_t k = path_budget(cfg, topology);
        const int n_l0 = cfg.l0_max - cfg.l0_min + 1;
        // pooled[strategy][l0 index] collects values across realizations
        std::vector<std::vector<std::vector<double>>> pooled(strategies.size(), std::vector<std::vector<double>>(n_l0));

        for (int r = 0; r < cfg.n_graph_realizations; r++) {
            const auto real_tag = static_cast<std::uint64_t>(r);
            const NetworkGraph bare = build_network(cfg, topology, derive_seed(cfg.seed, {topo_tag, real_tag, 1}));
            const NetworkGraph g =
                assign_edge_concurrence(bare, cfg.distribution, derive_seed(cfg.seed, {topo_tag, real_tag, 2}));

            for (int l0 = cfg.l0_min; l0 <= cfg.l0_max; l0++) {
                const auto l0_tag = static_cast<std::uint64_t>(l0);
                const PairSample sample = sample_pairs_at_distance(
                    g, l0, cfg.n_sources, cfg.n_dests, derive_seed(cfg.seed, {topo_tag, real_tag, l0_tag, 3}), true);
                if (sample.shortfall() > 0)
                    result.shortfalls.push_back({topology, r, l0, sample.requested, sample.pairs.size()});
                if (sample.pairs.empty())
                    continue;

                const std::vector<PathSet> sets = extract_paths(g, sample.pairs, k, threads);
                for (std::size_t s = 0; s < strategies.size(); s++) {
                    const auto values = evaluate(sets, strategies[s], k, cfg.fold);
                    auto& bucket = pooled[s][l0 - cfg.l0_min];
                    bucket.insert(bucket.end(), values.begin(), values.end());
                }
            }
        }

        for (std::size_t s = 0; s < strategies.size(); s++) {
            for (int i = 0; i < n_l0; i++) {
                if (pooled[s][i].empty())
                    continue;
                AggregateRow row = aggregate(pooled[s][i]);
                row.topology = topology;
                row.strategy = std::string(strategies[s].name());
                switch (strategies[s].kind()) {
                case StrategyKind::kBaseline:
                    row.k = 1;
                    break;
                case StrategyKind::kCustom:
                    row.k = static_cast<int>(strategies[s].permutation().size());
                    break;
                default:
                    row.k = k_label(cfg, topology);
                }
                row.l0 = cfg.l0_min + i;
                row.seed = cfg.seed;
                result.rows.push_back(std::move(row));
            }
        }
    }
    sort_rows(result.rows);
    return result;
}

void
sort_rows(std::vector<AggregateRow>& rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const AggregateRow& a, const AggregateRow& b) {
        const auto ta = topology_name(a.topology);
        const auto tb = topology_name(b.topology);
        if (ta != tb)
            return ta < tb;
        if (a.strategy != b.strategy)
            return a.strategy < b.strategy;
        if (a.k != b.k)
            return a.k < b.k;
        return a.l0 < b.l0;
    });
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

void
write_csv(std::ostream& out, std::span<const AggregateRow> rows)
{
    out << kCsvHeader << '\n';
    for (const AggregateRow& r : rows)
        out << format_row(r) << '\n';
}

std::vector<AggregateRow>
read_csv(std::istream& in)
{
    static const std::vector<std::string_view> columns = split_commas(kCsvHeader);

    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line))
        throw CsvError("line 1: missing header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    const auto header = split_commas(line);
    for (std::size_t i = 0; i < columns.size(); i++) {
        if (i >= header.size())
            throw CsvError("line 1: missing column '" + std::string(columns[i]) + "'");
        if (header[i] != columns[i])
            throw CsvError("line 1: column " + std::to_string(i + 1) + " is '" + std::string(header[i]) + "', expected '"
                           + std::string(columns[i]) + "'");
    }
    if (header.size() > columns.size())
        throw CsvError("line 1: unexpected column '" + std::string(header[columns.size()]) + "'");

    std::vector<AggregateRow> rows;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto f = split_commas(line);
        if (f.size() != columns.size())
            throw CsvError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns.size())
                           + " fields, found " + std::to_string(f.size()));
        AggregateRow r;
        try {
            r.topology = parse_topology(f[0]);
        } catch (const std::invalid_argument&) {
            throw CsvError("line " + std::to_string(line_no) + ", column 'topology': unknown value '" + std::string(f[0])
                           + "'");
        }
        if (f[1] != "SPF" && f[1] != "SPL" && f[1] != "BASELINE" && f[1] != "CUSTOM")
            throw CsvError("line " + std::to_string(line_no) + ", column 'strategy': unknown value '" + std::string(f[1])
                           + "'");
        r.strategy = std::string(f[1]);
        r.k = parse_field<int>(f[2], line_no, columns[2]);
        r.l0 = parse_field<int>(f[3], line_no, columns[3]);
        r.mean_concurrence = parse_field<double>(f[4], line_no, columns[4]);
        r.std_dev = parse_field<double>(f[5], line_no, columns[5]);
        r.n_samples = parse_field<std::size_t>(f[6], line_no, columns[6]);
        r.seed = parse_field<std::uint64_t>(f[7], line_no, columns[7]);
        if (!(r.mean_concurrence >= 0.0 && r.mean_concurrence <= 1.0))
            throw CsvError("line " + std::to_string(line_no) + ", column 'mean_concurrence': outside [0,1]");
        if (!(r.std_dev >= 0.0))
            throw CsvError("line " + std::to_string(line_no) + ", column 'std_dev': negative");
        if (r.n_samples < 1)
            throw CsvError("line " + std::to_string(line_no) + ", column 'n_samples': must be >= 1");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::optional<int>
crossover_distance(std::span<const CurvePoint> strategy, std::span<const CurvePoint> baseline)
{
    if (strategy.size() != baseline.size())
        throw std::invalid_argument("crossover_distance: curves have different l0 grids");
    for (std::size_t i = 0; i < strategy.size(); i++) {
        if (strategy[i].l0 != baseline[i].l0)
            throw std::invalid_argument("crossover_distance: curves have different l0 grids");
    }
    std::optional<int> cross;
    for (std::size_t i = strategy.size(); i-- > 0;) {
        if (strategy[i].mean < baseline[i].mean)
            break;
        cross = strategy[i].l0;
    }
    return cross;
}

std::map<CurveKey, std::vector<CurvePoint>>
group_curves(std::span<const AggregateRow> rows)
{
    std::map<CurveKey, std::vector<CurvePoint>> curves;
    for (const AggregateRow& r : rows)
        curves[{r.topology, r.strategy, r.k}].push_back({r.l0, r.mean_concurrence});
    for (auto& [key, pts] : curves)
        std::sort(pts.begin(), pts.end(), [](const CurvePoint& a, const CurvePoint& b) { return a.l0 < b.l0; });
    return curves;
}

}  // namespace mepnet
