#include "mepnet/paths.hpp"

#include "mepnet/rng.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mepnet
{

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

namespace
{

constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

Concurrence
path_concurrence(const NetworkGraph& g, const std::vector<EdgeId>& edges)
{
    double survival = 1.0;
    for (EdgeId e : edges)
        survival *= 1.0 - noise_from_concurrence(Concurrence(g.edge(e).concurrence)).value();
    return Concurrence(std::clamp(1.5 * survival - 0.5, 0.0, 1.0));
}

}  // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

PathFinder::PathFinder(const NetworkGraph& g)
    :g_(g),
    fwd_seen_(g.node_count(), 0),
    rev_seen_(g.node_count(), 0),
    removed_(g.edge_count(), 0),
    fwd_parent_(g.node_count(), kNoNode),
    rev_parent_(g.node_count(), kNoNode),
    fwd_edge_(g.node_count(), 0),
    rev_edge_(g.node_count(), 0)
{}

std::uint32_t
PathFinder::next_search()
{
    if (++search_ == 0) {
        std::fill(fwd_seen_.begin(), fwd_seen_.end(), 0);
        std::fill(rev_seen_.begin(), rev_seen_.end(), 0);
        search_ = 1;
    }
    return search_;
}

std::uint32_t
PathFinder::next_removal()
{
    if (++removal_ == 0) {
        std::fill(removed_.begin(), removed_.end(), 0);
        removal_ = 1;
    }
    return removal_;
}

std::optional<Path>
PathFinder::shortest_residual_path(NodeId s, NodeId d)
{
    // removed_[e] == removal_ marks edges taken by earlier paths of the
    // current query.
    const std::uint32_t mark = next_search();
    const std::uint32_t removal = removal_;
    auto is_removed = [&](EdgeId e) { return removed_[e] == removal; };

    auto& fwd = frontier_a_;
    auto& rev = frontier_b_;
    fwd.assign(1, s);
    rev.assign(1, d);
    fwd_seen_[s] = mark;
    fwd_parent_[s] = kNoNode;
    rev_seen_[d] = mark;
    rev_parent_[d] = kNoNode;

    NodeId meet = kNoNode;
    while (!fwd.empty() && !rev.empty() && meet == kNoNode) {
        const bool forward = fwd.size() <= rev.size();
        auto& level = forward ? fwd : rev;
        auto& seen = forward ? fwd_seen_ : rev_seen_;
        auto& other = forward ? rev_seen_ : fwd_seen_;
        auto& parent = forward ? fwd_parent_ : rev_parent_;
        auto& via = forward ? fwd_edge_ : rev_edge_;

        scratch_.clear();
        for (NodeId u : level) {
            const auto nbrs = g_.neighbors(u);
            const auto inc = g_.incident(u);
            for (std::size_t i = 0; i < nbrs.size(); i++) {
                const NodeId v = nbrs[i];
                if (is_removed(inc[i]))
                    continue;
                if (seen[v] != mark) {
                    seen[v] = mark;
                    parent[v] = u;
                    via[v] = inc[i];
                    scratch_.push_back(v);
                }
                if (other[v] == mark) {
                    meet = v;
                    break;
                }
            }
            if (meet != kNoNode)
                break;
        }
        level.swap(scratch_);
    }

    if (meet == kNoNode)
        return std::nullopt;

    Path p;
    for (NodeId x = meet; x != s; x = fwd_parent_[x]) {
        p.nodes.push_back(x);
        p.edges.push_back(fwd_edge_[x]);
    }
    p.nodes.push_back(s);
    std::reverse(p.nodes.begin(), p.nodes.end());
    std::reverse(p.edges.begin(), p.edges.end());
    for (NodeId x = meet; x != d; x = rev_parent_[x]) {
        p.edges.push_back(rev_edge_[x]);
        p.nodes.push_back(rev_parent_[x]);
    }
    return p;
}

std::optional<int>
PathFinder::shortest_path_length(NodeId s, NodeId d)
{
    if (s == d)
        throw DomainError("shortest_path_length: source equals destination");
    if (s >= g_.node_count() || d >= g_.node_count())
        throw std::out_of_range("shortest_path_length: node out of range");
    next_removal();
    const auto p = shortest_residual_path(s, d);
    if (!p)
        return std::nullopt;
    return p->length();
}

PathSet
PathFinder::edge_disjoint_paths(NodeId s, NodeId d, std::size_t k)
{
    if (k < 1)
        throw std::invalid_argument("edge_disjoint_paths: k must be >= 1");
    if (s == d)
        throw DomainError("edge_disjoint_paths: source equals destination");
    if (s >= g_.node_count() || d >= g_.node_count())
        throw std::out_of_range("edge_disjoint_paths: node out of range");

    PathSet ps;
    ps.source = s;
    ps.destination = d;
    const std::uint32_t removal = next_removal();
    for (std::size_t i = 0; i < k; i++) {
        auto p = shortest_residual_path(s, d);
        if (!p)
            break;
        for (EdgeId e : p->edges)
            removed_[e] = removal;
        p->concurrence = path_concurrence(g_, p->edges);
        ps.paths.push_back(std::move(*p));
    }
    return ps;
}

std::vector<NodeId>
PathFinder::nodes_at_distance(NodeId s, int hops)
{
    if (s >= g_.node_count())
        throw std::out_of_range("nodes_at_distance: node out of range");
    const std::uint32_t mark = next_search();
    auto& level = frontier_a_;
    level.assign(1, s);
    fwd_seen_[s] = mark;
    for (int h = 0; h < hops && !level.empty(); h++) {
        scratch_.clear();
        for (NodeId u : level) {
            for (NodeId v : g_.neighbors(u)) {
                if (fwd_seen_[v] != mark) {
                    fwd_seen_[v] = mark;
                    scratch_.push_back(v);
                }
            }
        }
        level.swap(scratch_);
    }
    return level;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

std::optional<int>
shortest_path_length(const NetworkGraph& g, NodeId s, NodeId d)
{
    PathFinder finder(g);
    return finder.shortest_path_length(s, d);
}

PathSet
edge_disjoint_paths(const NetworkGraph& g, NodeId s, NodeId d, std::size_t k)
{
    PathFinder finder(g);
    return finder.edge_disjoint_paths(s, d, k);
}

void
check_path_set(const NetworkGraph& g, const PathSet& ps)
{
    std::unordered_set<EdgeId> used;
    int previous = 0;
    for (const Path& p : ps.paths) {
        if (p.length() < 1 || p.nodes.size() != p.edges.size() + 1)
            throw std::logic_error("path has inconsistent node/edge lists");
        if (p.nodes.front() != ps.source || p.nodes.back() != ps.destination)
            throw std::logic_error("path does not join source and destination");
        for (std::size_t i = 0; i < p.edges.size(); i++) {
            const Edge& e = g.edge(p.edges[i]);
            const NodeId a = p.nodes[i];
            const NodeId b = p.nodes[i + 1];
            if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
                throw std::logic_error("consecutive path nodes are not joined by the recorded edge");
            if (!used.insert(p.edges[i]).second)
                throw std::logic_error("edge " + std::to_string(p.edges[i]) + " used twice");
        }
        if (p.length() < previous)
            throw std::logic_error("paths not in non-decreasing length order");
        previous = p.length();
    }
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

PairSample
sample_pairs_at_distance(const NetworkGraph& g,
                         int l0,
                         std::size_t n_sources,
                         std::size_t n_dest_per_source,
                         std::uint64_t seed,
                         bool interior_only)
{
    if (l0 < 1)
        throw std::invalid_argument("sample_pairs_at_distance: l0 must be >= 1");

    PairSample sample;
    sample.requested = n_sources * n_dest_per_source;

    std::vector<NodeId> candidates;
    if (interior_only && is_lattice(g.topology())) {
        candidates = g.interior_nodes();
    } else {
        candidates.resize(g.node_count());
        for (NodeId u = 0; u < g.node_count(); u++)
            candidates[u] = u;
    }

    const std::size_t attempts = std::min(candidates.size(), std::max<std::size_t>(10 * n_sources, 1000));
    Rng order(derive_seed(seed, {0x5eed}));
    order.partial_shuffle(std::span(candidates), attempts);

    PathFinder finder(g);
    for (std::size_t i = 0; i < attempts && sample.sources_used < n_sources; i++) {
        const NodeId s = candidates[i];
        auto far = finder.nodes_at_distance(s, l0);
        if (far.empty())
            continue;
        Rng pick(derive_seed(seed, {0xde57, s}));
        const std::size_t take = std::min(n_dest_per_source, far.size());
        pick.partial_shuffle(std::span(far), take);
        for (std::size_t j = 0; j < take; j++)
            sample.pairs.emplace_back(s, far[j]);
        sample.sources_used++;
    }
    return sample;
}

}  // namespace mepnet
