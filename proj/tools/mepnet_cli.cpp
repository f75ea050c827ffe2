// mepnet: generate topologies, run experiments, evaluate closed forms,
// compare crossovers and plot results.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include "mepnet/analytic.hpp"
#include "mepnet/config.hpp"
#include "mepnet/experiment.hpp"
#include "mepnet/graph.hpp"
#include "mepnet/svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace mepnet;

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

namespace
{

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::uint64_t
resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("MEPNET_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw UsageError("MEPNET_SEED is not an unsigned integer: '" + std::string(env) + "'");
    }
    throw UsageError("--seed is required (or set MEPNET_SEED)");
}

std::vector<AggregateRow>
load_rows(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_csv(in);
    } catch (const CsvError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void
write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

struct TopologyArgs
{
    std::string kind;
    std::optional<std::size_t> nodes;
    std::optional<std::size_t> edges;
    std::optional<int> rows;
    std::optional<int> cols;
    std::optional<std::uint64_t> seed;
    double c_min{0.97};
    double c_mean{0.98};
    double c_max{0.99};
    std::string out;
};

int
cmd_topology(const TopologyArgs& a)
{
    TopologyKind kind;
    try {
        kind = parse_topology(a.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::uint64_t seed = resolve_seed(a.seed);
    EdgeDistribution dist = EdgeDistribution::homogeneous(1.0);
    try {
        dist = EdgeDistribution::from_moments(a.c_min, a.c_mean, a.c_max);
    } catch (const std::exception& e) {
        throw UsageError(std::string("concurrence distribution: ") + e.what());
    }

    NetworkGraph g = [&] {
        if (is_lattice(kind)) {
            if (a.nodes || a.edges)
                throw UsageError("--nodes/--edges do not apply to lattice " + a.kind + "; use --rows/--cols");
            return build_lattice(kind, a.rows.value_or(100), a.cols.value_or(100));
        }
        if (a.rows || a.cols)
            throw UsageError("--rows/--cols apply only to lattices");
        const std::size_t n = a.nodes.value_or(10000);
        const std::size_t m = a.edges.value_or(50000);
        if (kind == TopologyKind::kRN)
            return build_random(n, m, seed);
        const auto attach = static_cast<std::size_t>(std::llround(static_cast<double>(m) / static_cast<double>(n)));
        return build_barabasi_albert(n, std::max<std::size_t>(attach, 1), seed);
    }();
    g = assign_edge_concurrence(g, dist, seed);

    std::ostringstream text;
    write_edge_list(text, g);
    write_text(a.out, text.str());

    std::map<std::size_t, std::size_t> histogram;
    std::size_t min_deg = g.node_count() ? g.degree(0) : 0;
    for (NodeId u = 0; u < g.node_count(); u++) {
        histogram[g.degree(u)]++;
        min_deg = std::min(min_deg, g.degree(u));
    }
    std::ostream& info = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
    info << "topology " << topology_name(kind) << "\n";
    info << "nodes " << g.node_count() << "\n";
    info << "edges " << g.edge_count() << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f",
                  g.node_count() ? 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count()) : 0.0);
    info << "degree min " << min_deg << " mean " << buf << " max " << g.max_degree() << "\n";
    info << "degree histogram";
    for (const auto& [deg, count] : histogram)
        info << " " << deg << ":" << count;
    info << "\n";
    return 0;
}

struct RunArgs
{
    std::string config;
    std::string out;
    unsigned threads{1};
    std::optional<std::uint64_t> seed;
};

int
cmd_run(const RunArgs& a)
{
    ExperimentConfig cfg;
    try {
        cfg = load_config(a.config);
    } catch (const ConfigError& e) {
        throw UsageError(a.config + ": " + e.what());
    }
    if (a.seed)
        cfg.seed = *a.seed;
    if (a.threads < 1)
        throw UsageError("--threads must be >= 1");

    const ExperimentResult result = run_experiment(cfg, a.threads);
    for (const Shortfall& s : result.shortfalls) {
        std::cerr << "shortfall: " << topology_name(s.topology) << " realization " << s.realization << " l0=" << s.l0
                  << ": " << s.achieved << " of " << s.requested << " pairs\n";
    }
    std::ostringstream text;
    write_csv(text, result.rows);
    write_text(a.out, text.str());
    return 0;
}

struct AnalyticArgs
{
    std::string topology;
    std::string strategy{"SPF"};
    int l0_max{6};
    double c{0.98};
    std::string out;
};

int
cmd_analytic(const AnalyticArgs& a)
{
    TopologyKind kind;
    try {
        kind = parse_topology(a.topology);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!is_lattice(kind))
        throw UsageError(a.topology + " has no closed form; analytic curves exist for TLN, SLN and HLN only");
    if (a.strategy != "SPF" && a.strategy != "SPL")
        throw UsageError("--strategy must be SPF or SPL");
    if (a.l0_max < 1)
        throw UsageError("--l0-max must be >= 1");
    if (!(a.c > 0.0 && a.c <= 1.0))
        throw UsageError("--c must lie in (0, 1]");

    std::string text = "l0,value\n";
    for (int l0 = 1; l0 <= a.l0_max; l0++) {
        const Concurrence v = a.strategy == "SPF" ? avg_spf(kind, l0, Concurrence(a.c)) : avg_spl(kind, l0, Concurrence(a.c));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d,%.9g\n", l0, v.value());
        text += buf;
    }
    write_text(a.out, text);
    return 0;
}

int
cmd_compare(const std::vector<std::string>& files)
{
    std::vector<AggregateRow> rows;
    for (const auto& f : files) {
        auto part = load_rows(f);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    sort_rows(rows);
    const auto curves = group_curves(rows);

    std::map<TopologyKind, const std::vector<CurvePoint>*> baselines;
    for (const auto& [key, pts] : curves) {
        if (key.strategy == "BASELINE")
            baselines[key.topology] = &pts;
    }
    if (baselines.empty())
        throw std::runtime_error("no BASELINE rows in input");

    std::printf("%-8s %-9s %4s %s\n", "topology", "strategy", "k", "crossover_l0");
    for (const auto& [key, pts] : curves) {
        if (key.strategy == "BASELINE")
            continue;
        const auto it = baselines.find(key.topology);
        if (it == baselines.end())
            throw std::runtime_error("no BASELINE rows for topology " + std::string(topology_name(key.topology)));
        // restrict the baseline to the strategy's grid
        std::vector<CurvePoint> base;
        for (const CurvePoint& p : pts) {
            const auto match = std::find_if(it->second->begin(), it->second->end(),
                                            [&](const CurvePoint& b) { return b.l0 == p.l0; });
            if (match == it->second->end())
                throw std::runtime_error("BASELINE for " + std::string(topology_name(key.topology)) + " lacks l0="
                                         + std::to_string(p.l0));
            base.push_back(*match);
        }
        const auto cross = crossover_distance(pts, base);
        std::printf("%-8s %-9s %4d %s\n", std::string(topology_name(key.topology)).c_str(), key.strategy.c_str(), key.k,
                    cross ? std::to_string(*cross).c_str() : "none");
    }
    return 0;
}

int
cmd_plot(const std::string& csv, const std::string& out, const std::string& title)
{
    const auto rows = load_rows(csv);
    if (rows.empty())
        throw std::runtime_error(csv + ": no data rows");
    ChartOptions options;
    if (!title.empty())
        options.title = title;
    write_text(out, render_chart(rows, options));
    return 0;
}

}  // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

int
main(int argc, char** argv)
{
    CLI::App app{"Multipath entanglement purification on quantum network models"};
    app.require_subcommand(1);

    TopologyArgs topo;
    auto* c_topo = app.add_subcommand("topology", "Generate a network and write its edge list");
    c_topo->add_option("--kind", topo.kind, "RN, BAN, TLN, SLN or HLN")->required();
    c_topo->add_option("--nodes", topo.nodes, "Node count (RN, BAN)");
    c_topo->add_option("--edges", topo.edges, "Edge count (RN); BAN attaches round(edges/nodes) per node");
    c_topo->add_option("--rows", topo.rows, "Lattice rows");
    c_topo->add_option("--cols", topo.cols, "Lattice columns");
    c_topo->add_option("--seed", topo.seed, "Random seed (default: $MEPNET_SEED)");
    c_topo->add_option("--c-min", topo.c_min, "Minimum edge concurrence");
    c_topo->add_option("--c-mean", topo.c_mean, "Mean edge concurrence");
    c_topo->add_option("--c-max", topo.c_max, "Maximum edge concurrence");
    c_topo->add_option("--out", topo.out, "Edge-list file ('-' for stdout)")->required();

    RunArgs run;
    auto* c_run = app.add_subcommand("run", "Run an experiment described by a config file");
    c_run->add_option("--config", run.config, "INI experiment config")->required();
    c_run->add_option("--out", run.out, "Output CSV ('-' for stdout)")->required();
    c_run->add_option("--threads", run.threads, "Worker threads; output does not depend on it");
    c_run->add_option("--seed", run.seed, "Override the config seed");

    AnalyticArgs ana;
    auto* c_ana = app.add_subcommand("analytic", "Closed-form lattice-average curve");
    c_ana->add_option("--topology", ana.topology, "TLN, SLN or HLN")->required();
    c_ana->add_option("--strategy", ana.strategy, "SPF or SPL");
    c_ana->add_option("--l0-max", ana.l0_max, "Largest l0");
    c_ana->add_option("--c", ana.c, "Homogeneous edge concurrence");
    c_ana->add_option("--out", ana.out, "Output CSV (default stdout)");

    std::vector<std::string> compare_files;
    auto* c_cmp = app.add_subcommand("compare", "Crossover distance per curve");
    c_cmp->add_option("--csv", compare_files, "Result CSV (repeatable)")->required();

    std::string plot_csv;
    std::string plot_out;
    std::string plot_title;
    auto* c_plot = app.add_subcommand("plot", "Render result CSV as an SVG chart");
    c_plot->add_option("--csv", plot_csv, "Result CSV")->required();
    c_plot->add_option("--out", plot_out, "SVG file")->required();
    c_plot->add_option("--title", plot_title, "Chart title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*c_topo)
            return cmd_topology(topo);
        if (*c_run)
            return cmd_run(run);
        if (*c_ana)
            return cmd_analytic(ana);
        if (*c_cmp)
            return cmd_compare(compare_files);
        if (*c_plot)
            return cmd_plot(plot_csv, plot_out, plot_title);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
