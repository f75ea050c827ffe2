#pragma once

// Network graphs for the five studied topologies plus per-edge concurrence.

#include "mepnet/entanglement.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace mepnet
{

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class TopologyKind
{
    kRN,   // random G(n, m)
    kBAN,  // Barabasi-Albert preferential attachment
    kTLN,  // triangular lattice
    kSLN,  // square lattice
    kHLN,  // hexagonal (honeycomb) lattice
};

std::string_view topology_name(TopologyKind kind);
TopologyKind parse_topology(std::string_view name);
bool is_lattice(TopologyKind kind);

/// Degree of a node away from the boundary; 0 for RN/BAN.
int lattice_degree(TopologyKind kind);

struct Edge
{
    NodeId u;  // u < v
    NodeId v;
    double concurrence;
};

struct LatticeDims
{
    int rows;
    int cols;
};

/*
 * Immutable simple undirected graph.  Edges are stored sorted by (u, v) with
 * u < v; EdgeId is the index into that list.  Adjacency lists are sorted by
 * neighbor index, which fixes every tie-break in the path search.
 * */
class NetworkGraph
{
public:
    /// Validates simplicity (no self-loops, no duplicates, endpoints in range).
    static NetworkGraph from_edges(TopologyKind kind,
                                   std::size_t node_count,
                                   std::vector<std::pair<NodeId, NodeId>> edges,
                                   std::uint64_t seed = 0,
                                   std::optional<LatticeDims> dims = std::nullopt,
                                   int interior_margin = 1);

    TopologyKind topology() const { return topology_; }
    std::uint64_t seed() const { return seed_; }
    std::optional<LatticeDims> lattice_dims() const { return dims_; }

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    std::span<const NodeId> neighbors(NodeId u) const
    {
        return {adjacent_.data() + offsets_[u], adjacent_.data() + offsets_[u + 1]};
    }

    /// Edge ids parallel to neighbors(u).
    std::span<const EdgeId> incident(NodeId u) const
    {
        return {incident_.data() + offsets_[u], incident_.data() + offsets_[u + 1]};
    }

    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    std::size_t max_degree() const;

    std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

    bool is_interior(NodeId u) const { return interior_[u] != 0; }
    int interior_margin() const { return margin_; }
    std::vector<NodeId> interior_nodes() const;

    /// Copy with every edge concurrence replaced; values must lie in [0,1].
    NetworkGraph with_concurrences(std::span<const double> values) const;

    /// Same edges, interior flags recomputed for a different margin.
    NetworkGraph with_interior_margin(int margin) const;

private:
    NetworkGraph() = default;

    void compute_interior(int margin);

    TopologyKind topology_{TopologyKind::kRN};
    std::uint64_t seed_{0};
    std::optional<LatticeDims> dims_;
    int margin_{1};
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacent_;
    std::vector<EdgeId> incident_;
    std::vector<std::uint8_t> interior_;
};

NetworkGraph build_random(std::size_t n, std::size_t m, std::uint64_t seed);

/// Starts from a clique on m_attach+1 nodes; n == m_attach+1 yields the complete graph.
NetworkGraph build_barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed);

NetworkGraph build_triangular(int rows, int cols, int interior_margin = 1);
NetworkGraph build_square(int rows, int cols, int interior_margin = 1);
NetworkGraph build_hexagonal(int rows, int cols, int interior_margin = 1);
NetworkGraph build_lattice(TopologyKind kind, int rows, int cols, int interior_margin = 1);

/// Each edge gets an independent uniform draw on [dist.min(), dist.max()].
NetworkGraph assign_edge_concurrence(const NetworkGraph& g, const EdgeDistribution& dist, std::uint64_t seed);

/*
 * Edge-list text format:
 *      # topology=<kind> n=<n> seed=<seed>
 *      u v c_e          (one line per edge, c_e with 9 significant digits)
 * */
void write_edge_list(std::ostream& out, const NetworkGraph& g);
NetworkGraph read_edge_list(std::istream& in);

}  // namespace mepnet
