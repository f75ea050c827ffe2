#pragma once

// Closed-form k=3 combined concurrence and its lattice averages.

#include "mepnet/entanglement.hpp"
#include "mepnet/graph.hpp"

#include <array>
#include <vector>

namespace mepnet
{

/*
 * Combined concurrence of three paths of l0, l1, l2 hops pumped in that
 * order, each edge at concurrence c.  With e = 1-c:
 *      f1 = 3l0 + 3l1 + 4l2
 *      f2 = 4l0l1 + 5l1l2 + 5l0l2
 *      f3 = 6l0l1 + 4l1l2 + 4l0l2
 *      f4 = l0l1l2
 *      num = 1 - f1 e/6 + f2 e^2/18 - 7 f4 e^3/54
 *      den = 1 - (f1 - 2l2) e/6 + f3 e^2/18 - 4 f4 e^3/27
 * clamped to [0,1].  Throws DomainError for lengths < 1 or c <= 0.
 * */
Concurrence c_k3(int l0, int l1, int l2, Concurrence c);

/// True iff some reordering of (l0, l1, l2) changes c_k3 by more than 1e-12.
bool c_k3_not_symmetric(int l0, int l1, int l2, Concurrence c);

struct LengthClass
{
    double weight;
    std::array<int, 3> lengths;  // pumping order under SPF
};

/*
 * Lengths of the three shortest edge-disjoint paths between lattice nodes
 * l0 hops apart, as a weighted mixture over pair classes.  Weights sum to 1.
 * Throws DomainError for RN/BAN or l0 < 1.
 * */
std::vector<LengthClass> lattice_length_classes(TopologyKind topology, int l0);

Concurrence avg_spf(TopologyKind topology, int l0, Concurrence c);

/// Same mixture as avg_spf with every length triple reversed.
Concurrence avg_spl(TopologyKind topology, int l0, Concurrence c);

}  // namespace mepnet
