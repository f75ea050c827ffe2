#include "mepnet/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

namespace mepnet
{

namespace
{

std::string_view
trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view>
split_list(std::string_view s)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty())
            out.push_back(item);
        if (comma == std::string_view::npos)
            return out;
        s.remove_prefix(comma + 1);
    }
}

struct Entry
{
    std::string value;
    std::size_t line;
};

class Reader
{
public:
    explicit Reader(std::map<std::string, Entry> entries)
        :entries_(std::move(entries))
    {}

    [[noreturn]] void fail(const std::string& key, const std::string& msg) const
    {
        const auto it = entries_.find(key);
        const std::string where = it == entries_.end() ? "" : "line " + std::to_string(it->second.line) + ": ";
        throw ConfigError(where + "key '" + key + "': " + msg);
    }

    std::optional<std::string_view> get(const std::string& key)
    {
        const auto it = entries_.find(key);
        if (it == entries_.end())
            return std::nullopt;
        used_.push_back(key);
        return it->second.value;
    }

    template <typename T>
    void number(const std::string& key, T& out)
    {
        const auto v = get(key);
        if (!v)
            return;
        T value{};
        const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), value);
        if (ec != std::errc() || ptr != v->data() + v->size() || v->empty())
            fail(key, "not a valid number: '" + std::string(*v) + "'");
        out = value;
    }

    void boolean(const std::string& key, bool& out)
    {
        const auto v = get(key);
        if (!v)
            return;
        if (*v == "true" || *v == "1" || *v == "yes")
            out = true;
        else if (*v == "false" || *v == "0" || *v == "no")
            out = false;
        else
            fail(key, "expected true or false, got '" + std::string(*v) + "'");
    }

    void check_all_used() const
    {
        for (const auto& [key, entry] : entries_) {
            if (std::find(used_.begin(), used_.end(), key) == used_.end())
                throw ConfigError("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
        }
    }

private:
    std::map<std::string, Entry> entries_;
    std::vector<std::string> used_;
};

}  // anon

ExperimentConfig
parse_config(std::istream& in)
{
    std::map<std::string, Entry> entries;
    std::string section;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string_view line = raw;
        const auto comment = line.find_first_of("#;");
        line = trim(line.substr(0, comment));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const auto key_part = trim(line.substr(0, eq));
        if (key_part.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        const std::string key = section.empty() ? std::string(key_part) : section + "." + std::string(key_part);
        if (entries.count(key))
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        entries[key] = {std::string(trim(line.substr(eq + 1))), line_no};
    }

    Reader r(std::move(entries));
    ExperimentConfig cfg;

    r.number("experiment.seed", cfg.seed);
    r.number("experiment.realizations", cfg.n_graph_realizations);
    r.number("experiment.l0_min", cfg.l0_min);
    r.number("experiment.l0_max", cfg.l0_max);
    r.number("experiment.sources", cfg.n_sources);
    r.number("experiment.destinations", cfg.n_dests);
    if (auto v = r.get("experiment.topologies")) {
        cfg.topologies.clear();
        for (auto item : split_list(*v)) {
            try {
                cfg.topologies.push_back(parse_topology(item));
            } catch (const std::invalid_argument&) {
                r.fail("experiment.topologies", "unknown topology '" + std::string(item) + "'");
            }
        }
    }
    if (auto v = r.get("experiment.strategies")) {
        cfg.strategies.clear();
        // CUSTOM:i,j,k carries its own commas; bare indices rejoin the preceding item
        std::vector<std::string> items;
        for (auto item : split_list(*v)) {
            const bool index = std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
            if (index && !items.empty() && items.back().rfind("CUSTOM:", 0) == 0)
                items.back() += "," + std::string(item);
            else
                items.emplace_back(item);
        }
        for (const auto& item : items) {
            try {
                cfg.strategies.push_back(parse_strategy(item));
            } catch (const std::invalid_argument& e) {
                r.fail("experiment.strategies", e.what());
            }
        }
    }

    r.number("network.nodes", cfg.n_nodes);
    r.number("network.edges", cfg.target_edges);
    r.number("network.lattice_rows", cfg.lattice_rows);
    r.number("network.lattice_cols", cfg.lattice_cols);
    r.number("network.interior_margin", cfg.interior_margin);

    double c_min = cfg.distribution.min();
    double c_mean = cfg.distribution.mean();
    double c_max = cfg.distribution.max();
    r.number("concurrence.min", c_min);
    r.number("concurrence.mean", c_mean);
    r.number("concurrence.max", c_max);
    try {
        cfg.distribution = EdgeDistribution::from_moments(c_min, c_mean, c_max);
    } catch (const std::exception& e) {
        r.fail("concurrence.mean", e.what());
    }

    for (TopologyKind t : {TopologyKind::kRN, TopologyKind::kBAN, TopologyKind::kTLN, TopologyKind::kSLN,
                           TopologyKind::kHLN}) {
        const std::string key = "paths.k_" + std::string(topology_name(t));
        if (auto v = r.get(key)) {
            if (*v == "all") {
                cfg.k_paths[t] = PathBudget::every();
            } else {
                int k = 0;
                const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), k);
                if (ec != std::errc() || ptr != v->data() + v->size() || k < 1)
                    r.fail(key, "expected a positive integer or 'all', got '" + std::string(*v) + "'");
                cfg.k_paths[t] = PathBudget::exactly(k);
            }
        }
    }
    r.boolean("paths.adaptive_skip", cfg.fold.adaptive_skip);
    if (auto v = r.get("paths.pump_model")) {
        if (*v == "bell_diagonal")
            cfg.fold.model = PumpModel::kBellDiagonal;
        else if (*v == "twirled")
            cfg.fold.model = PumpModel::kTwirled;
        else
            r.fail("paths.pump_model", "expected bell_diagonal or twirled, got '" + std::string(*v) + "'");
    }

    r.check_all_used();
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    return cfg;
}

ExperimentConfig
load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace mepnet
