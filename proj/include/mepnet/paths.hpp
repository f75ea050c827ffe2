#pragma once

// Edge-disjoint S-D paths and S-D pair sampling.

#include "mepnet/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mepnet
{

struct Path
{
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
    Concurrence concurrence;  // swap composition over the edges

    int length() const { return static_cast<int>(edges.size()); }
};

struct PathSet
{
    NodeId source{0};
    NodeId destination{0};
    std::vector<Path> paths;  // discovery order, non-decreasing length

    std::size_t size() const { return paths.size(); }
    bool empty() const { return paths.empty(); }
};

/*
 * Breadth-first search workspace, reusable across queries on one graph.
 *
 * Shortest paths come from a bidirectional BFS that expands the smaller
 * frontier one full level at a time and scans neighbors in ascending index
 * order; the first edge joining the two searches closes the path.  That makes
 * every result a deterministic function of the graph.
 *
 * Not thread-safe; use one finder per thread.
 * */
class PathFinder
{
public:
    explicit PathFinder(const NetworkGraph& g);

    std::optional<int> shortest_path_length(NodeId s, NodeId d);

    /// Greedy extraction: shortest path in the residual graph, remove its
    /// edges, repeat up to k times or until s and d disconnect.
    PathSet edge_disjoint_paths(NodeId s, NodeId d, std::size_t k);

    /// Nodes at exactly `hops` from s, in BFS discovery order.
    std::vector<NodeId> nodes_at_distance(NodeId s, int hops);

private:
    std::optional<Path> shortest_residual_path(NodeId s, NodeId d);
    std::uint32_t next_search();
    std::uint32_t next_removal();

    const NetworkGraph& g_;
    std::uint32_t search_{0};
    std::uint32_t removal_{0};
    std::vector<std::uint32_t> fwd_seen_;
    std::vector<std::uint32_t> rev_seen_;
    std::vector<std::uint32_t> removed_;
    std::vector<NodeId> fwd_parent_;
    std::vector<NodeId> rev_parent_;
    std::vector<EdgeId> fwd_edge_;
    std::vector<EdgeId> rev_edge_;
    std::vector<NodeId> frontier_a_;
    std::vector<NodeId> frontier_b_;
    std::vector<NodeId> scratch_;
};

/// Hop distance; nullopt if d is unreachable. Throws DomainError if s == d.
std::optional<int> shortest_path_length(const NetworkGraph& g, NodeId s, NodeId d);

PathSet edge_disjoint_paths(const NetworkGraph& g, NodeId s, NodeId d, std::size_t k);

/// Throws std::logic_error if the set violates edge-disjointness or ordering.
void check_path_set(const NetworkGraph& g, const PathSet& ps);

struct PairSample
{
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::size_t requested{0};      // n_sources * n_dest_per_source
    std::size_t sources_used{0};

    std::size_t shortfall() const { return requested - pairs.size(); }
};

/*
 * Up to n_sources sources, drawn uniformly (interior nodes only when
 * interior_only is set on a lattice), each paired with up to
 * n_dest_per_source destinations drawn uniformly from the nodes at exactly
 * l0 hops.  Sources without any node at l0 are skipped; at most
 * max(10 * n_sources, 1000) candidate sources are tried.
 * */
PairSample sample_pairs_at_distance(const NetworkGraph& g,
                                    int l0,
                                    std::size_t n_sources,
                                    std::size_t n_dest_per_source,
                                    std::uint64_t seed,
                                    bool interior_only);

}  // namespace mepnet
