#include "mepnet/graph.hpp"

#include "mepnet/rng.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mepnet
{

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

namespace
{

constexpr std::string_view kTopologyNames[] = {"RN", "BAN", "TLN", "SLN", "HLN"};

std::uint64_t
pair_key(NodeId u, NodeId v)
{
    if (u > v)
        std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

void
check_lattice_dims(int rows, int cols)
{
    if (rows < 3 || cols < 3)
        throw std::invalid_argument("lattice needs at least 3 rows and 3 columns");
}

NodeId
cell(int r, int c, int cols)
{
    return static_cast<NodeId>(r * cols + c);
}

}  // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

std::string_view
topology_name(TopologyKind kind)
{
    return kTopologyNames[static_cast<int>(kind)];
}

TopologyKind
parse_topology(std::string_view name)
{
    for (int i = 0; i < 5; i++) {
        if (kTopologyNames[i] == name)
            return static_cast<TopologyKind>(i);
    }
    throw std::invalid_argument("unknown topology: " + std::string(name));
}

bool
is_lattice(TopologyKind kind)
{
    return kind == TopologyKind::kTLN || kind == TopologyKind::kSLN || kind == TopologyKind::kHLN;
}

int
lattice_degree(TopologyKind kind)
{
    switch (kind) {
    case TopologyKind::kTLN:
        return 6;
    case TopologyKind::kSLN:
        return 4;
    case TopologyKind::kHLN:
        return 3;
    default:
        return 0;
    }
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

NetworkGraph
NetworkGraph::from_edges(TopologyKind kind,
                         std::size_t node_count,
                         std::vector<std::pair<NodeId, NodeId>> edges,
                         std::uint64_t seed,
                         std::optional<LatticeDims> dims,
                         int interior_margin)
{
    if (node_count >= std::numeric_limits<NodeId>::max())
        throw std::invalid_argument("graph too large");

    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop on node " + std::to_string(u));
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edge in edge list");

    NetworkGraph g;
    g.topology_ = kind;
    g.seed_ = seed;
    g.dims_ = dims;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges)
        g.edges_.push_back({u, v, 1.0});

    std::vector<std::size_t> deg(node_count, 0);
    for (const Edge& e : g.edges_) {
        deg[e.u]++;
        deg[e.v]++;
    }
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; i++)
        g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adjacent_.resize(g.offsets_.back());
    g.incident_.resize(g.offsets_.back());

    // Edges are sorted by (u, v), so filling in edge order leaves every
    // adjacency list sorted: lower neighbors arrive through their own (w, u)
    // edges, which precede all (u, *) edges, in increasing w.
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edges_.size(); id++) {
        const Edge& e = g.edges_[id];
        g.adjacent_[fill[e.u]] = e.v;
        g.incident_[fill[e.u]++] = id;
        g.adjacent_[fill[e.v]] = e.u;
        g.incident_[fill[e.v]++] = id;
    }

    g.compute_interior(interior_margin);
    return g;
}

void
NetworkGraph::compute_interior(int margin)
{
    margin_ = margin;
    const std::size_t n = node_count();
    interior_.assign(n, 1);
    if (!is_lattice(topology_))
        return;

    // Multi-source BFS from every node short of the full lattice degree.
    const auto full = static_cast<std::size_t>(lattice_degree(topology_));
    std::vector<int> dist(n, -1);
    std::deque<NodeId> queue;
    for (NodeId u = 0; u < n; u++) {
        if (degree(u) < full) {
            dist[u] = 0;
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    for (NodeId u = 0; u < n; u++)
        interior_[u] = (dist[u] < 0 || dist[u] >= std::max(margin, 1)) ? 1 : 0;
}

std::size_t
NetworkGraph::max_degree() const
{
    std::size_t best = 0;
    for (NodeId u = 0; u < node_count(); u++)
        best = std::max(best, degree(u));
    return best;
}

std::optional<EdgeId>
NetworkGraph::find_edge(NodeId u, NodeId v) const
{
    if (u >= node_count() || v >= node_count())
        return std::nullopt;
    const auto nbrs = neighbors(u);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v)
        return std::nullopt;
    return incident(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<NodeId>
NetworkGraph::interior_nodes() const
{
    std::vector<NodeId> out;
    for (NodeId u = 0; u < node_count(); u++) {
        if (interior_[u])
            out.push_back(u);
    }
    return out;
}

NetworkGraph
NetworkGraph::with_concurrences(std::span<const double> values) const
{
    if (values.size() != edges_.size())
        throw std::invalid_argument("with_concurrences: one value per edge required");
    NetworkGraph g = *this;
    for (std::size_t i = 0; i < values.size(); i++)
        g.edges_[i].concurrence = Concurrence(values[i]).value();
    return g;
}

NetworkGraph
NetworkGraph::with_interior_margin(int margin) const
{
    NetworkGraph g = *this;
    g.compute_interior(margin);
    return g;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

NetworkGraph
build_random(std::size_t n, std::size_t m, std::uint64_t seed)
{
    if (n < 2 && m > 0)
        throw std::invalid_argument("build_random: need at least 2 nodes for any edge");
    const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > max_edges)
        throw std::invalid_argument("build_random: " + std::to_string(m) + " edges exceed the "
                                    + std::to_string(max_edges) + " possible on " + std::to_string(n) + " nodes");

    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m);

    if (m <= max_edges / 2) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(m * 2);
        while (edges.size() < m) {
            const auto u = static_cast<NodeId>(rng.below(n));
            const auto v = static_cast<NodeId>(rng.below(n));
            if (u == v || !seen.insert(pair_key(u, v)).second)
                continue;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    } else {
        std::vector<std::pair<NodeId, NodeId>> all;
        all.reserve(max_edges);
        for (NodeId u = 0; u < n; u++) {
            for (NodeId v = u + 1; v < n; v++)
                all.emplace_back(u, v);
        }
        rng.partial_shuffle(std::span(all), m);
        edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    }
    return NetworkGraph::from_edges(TopologyKind::kRN, n, std::move(edges), seed);
}

NetworkGraph
build_barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed)
{
    if (m_attach < 1 || m_attach >= n)
        throw std::invalid_argument("build_barabasi_albert: need 1 <= m_attach < n");

    Rng rng(seed);
    const std::size_t core = m_attach + 1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(core * m_attach / 2 + (n - core) * m_attach);
    // Every edge endpoint once: sampling from it is degree-proportional.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    for (NodeId u = 0; u < core; u++) {
        for (NodeId v = u + 1; v < core; v++) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    std::vector<NodeId> targets;
    for (auto v = static_cast<NodeId>(core); v < n; v++) {
        targets.clear();
        while (targets.size() < m_attach) {
            const NodeId t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return NetworkGraph::from_edges(TopologyKind::kBAN, n, std::move(edges), seed);
}

NetworkGraph
build_square(int rows, int cols, int interior_margin)
{
    check_lattice_dims(rows, cols);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            if (c + 1 < cols)
                edges.emplace_back(cell(r, c, cols), cell(r, c + 1, cols));
            if (r + 1 < rows)
                edges.emplace_back(cell(r, c, cols), cell(r + 1, c, cols));
        }
    }
    return NetworkGraph::from_edges(TopologyKind::kSLN, static_cast<std::size_t>(rows) * cols,
                                    std::move(edges), 0, LatticeDims{rows, cols}, interior_margin);
}

NetworkGraph
build_triangular(int rows, int cols, int interior_margin)
{
    check_lattice_dims(rows, cols);
    // Square grid plus one diagonal per cell: (r,c)-(r+1,c+1).
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            if (c + 1 < cols)
                edges.emplace_back(cell(r, c, cols), cell(r, c + 1, cols));
            if (r + 1 < rows)
                edges.emplace_back(cell(r, c, cols), cell(r + 1, c, cols));
            if (r + 1 < rows && c + 1 < cols)
                edges.emplace_back(cell(r, c, cols), cell(r + 1, c + 1, cols));
        }
    }
    return NetworkGraph::from_edges(TopologyKind::kTLN, static_cast<std::size_t>(rows) * cols,
                                    std::move(edges), 0, LatticeDims{rows, cols}, interior_margin);
}

NetworkGraph
build_hexagonal(int rows, int cols, int interior_margin)
{
    check_lattice_dims(rows, cols);
    // Brick-wall honeycomb: full rows, rungs where (r + c) is even.
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            if (c + 1 < cols)
                edges.emplace_back(cell(r, c, cols), cell(r, c + 1, cols));
            if (r + 1 < rows && (r + c) % 2 == 0)
                edges.emplace_back(cell(r, c, cols), cell(r + 1, c, cols));
        }
    }
    return NetworkGraph::from_edges(TopologyKind::kHLN, static_cast<std::size_t>(rows) * cols,
                                    std::move(edges), 0, LatticeDims{rows, cols}, interior_margin);
}

NetworkGraph
build_lattice(TopologyKind kind, int rows, int cols, int interior_margin)
{
    switch (kind) {
    case TopologyKind::kTLN:
        return build_triangular(rows, cols, interior_margin);
    case TopologyKind::kSLN:
        return build_square(rows, cols, interior_margin);
    case TopologyKind::kHLN:
        return build_hexagonal(rows, cols, interior_margin);
    default:
        throw std::invalid_argument("build_lattice: " + std::string(topology_name(kind)) + " is not a lattice");
    }
}

NetworkGraph
assign_edge_concurrence(const NetworkGraph& g, const EdgeDistribution& dist, std::uint64_t seed)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("assign_edge_concurrence: graph has no edges");
    std::vector<double> values(g.edge_count());
    if (dist.is_homogeneous()) {
        std::fill(values.begin(), values.end(), dist.mean());
    } else {
        Rng rng(seed);
        const double lo = dist.min();
        const double hi = dist.max();
        for (double& v : values)
            v = std::clamp(rng.uniform(lo, hi), lo, hi);
    }
    return g.with_concurrences(values);
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

void
write_edge_list(std::ostream& out, const NetworkGraph& g)
{
    out << "# topology=" << topology_name(g.topology()) << " n=" << g.node_count()
        << " seed=" << g.seed() << '\n';
    char buf[64];
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof buf, "%u %u %.9g\n", e.u, e.v, e.concurrence);
        out << buf;
    }
}

NetworkGraph
read_edge_list(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("edge list line 1: missing '# topology=... n=... seed=...' header");

    std::optional<TopologyKind> kind;
    std::optional<std::size_t> n;
    std::uint64_t seed = 0;
    std::istringstream header(line.substr(2));
    std::string field;
    while (header >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("edge list line 1: malformed header field '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        try {
            if (key == "topology")
                kind = parse_topology(value);
            else if (key == "n")
                n = std::stoull(value);
            else if (key == "seed")
                seed = std::stoull(value);
        } catch (const std::exception&) {
            throw std::runtime_error("edge list line 1: bad value for '" + key + "'");
        }
    }
    if (!kind || !n)
        throw std::runtime_error("edge list line 1: header needs topology= and n=");

    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::vector<double> values;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty())
            continue;
        std::istringstream row(line);
        unsigned long u = 0;
        unsigned long v = 0;
        double c = 0.0;
        if (!(row >> u >> v >> c))
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": expected 'u v c_e'");
        pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        values.push_back(c);
    }

    // from_edges sorts; keep values aligned by sorting the pairs first.
    std::vector<std::size_t> order(pairs.size());
    for (std::size_t i = 0; i < order.size(); i++) {
        order[i] = i;
        if (pairs[i].first > pairs[i].second)
            std::swap(pairs[i].first, pairs[i].second);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pairs[a] < pairs[b]; });
    std::vector<std::pair<NodeId, NodeId>> sorted_pairs;
    std::vector<double> sorted_values;
    for (std::size_t i : order) {
        sorted_pairs.push_back(pairs[i]);
        sorted_values.push_back(values[i]);
    }

    NetworkGraph g = NetworkGraph::from_edges(*kind, *n, std::move(sorted_pairs), seed);
    return g.with_concurrences(sorted_values);
}

}  // namespace mepnet
