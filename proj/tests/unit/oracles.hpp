#pragma once

// Independent reference implementations used only by the tests.

#include "mepnet/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <vector>

namespace oracle
{

/*
 * Deutsch pumping by Pauli-frame bookkeeping.  A Bell-diagonal pair is a
 * mixture of Pauli errors (x, z) on |phi+>:
 *      phi+ = (0,0)  psi+ = (1,0)  phi- = (0,1)  psi- = (1,1)
 * The local rotation swaps psi- and phi-; the bilateral CNOT sends
 * x2 ^= x1 and z1 ^= z2; the target survives when its x bit is 0.
 * Weights are in (phi+, psi-, psi+, phi-) order, as in the library.
 * */
inline std::array<double, 4>
deutsch(const std::array<double, 4>& kept, const std::array<double, 4>& fresh)
{
    // library slot -> (x, z) after the rotation
    constexpr int kx[4] = {0, 0, 1, 1};  // phi+ -> (0,0), psi- -> (0,1), psi+ -> (1,0), phi- -> (1,1)
    constexpr int kz[4] = {0, 1, 0, 1};
    auto slot = [](int x, int z) {
        // output frame is not rotated back
        if (x == 0 && z == 0) return 0;  // phi+
        if (x == 1 && z == 1) return 1;  // psi-
        if (x == 1 && z == 0) return 2;  // psi+
        return 3;                        // phi-
    };
    std::array<double, 4> out{};
    double norm = 0.0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            const int x1 = kx[i];
            const int z1 = kz[i] ^ kz[j];
            const int x2 = kx[j] ^ kx[i];
            if (x2 != 0)
                continue;
            const double w = kept[i] * fresh[j];
            out[slot(x1, z1)] += w;
            norm += w;
        }
    }
    for (double& w : out)
        w /= norm;
    return out;
}

inline std::array<double, 4>
werner(double fidelity)
{
    const double r = (1.0 - fidelity) / 3.0;
    return {fidelity, r, r, r};
}

inline double
bell_concurrence(const std::array<double, 4>& w)
{
    double m = 0.0;
    for (double x : w)
        m = std::max(m, x);
    return std::max(0.0, 2.0 * m - 1.0);
}

/// Plain single-source BFS distances; -1 when unreachable.
inline std::vector<int>
bfs(const mepnet::NetworkGraph& g, mepnet::NodeId s)
{
    std::vector<int> dist(g.node_count(), -1);
    std::deque<mepnet::NodeId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

/// Max edge-disjoint path count via unit-capacity augmenting paths.
inline int
max_edge_disjoint(const mepnet::NetworkGraph& g, mepnet::NodeId s, mepnet::NodeId d)
{
    // flow on each edge direction: +1 means u->v used, -1 v->u used
    std::vector<int> flow(g.edge_count(), 0);
    int total = 0;
    while (true) {
        std::vector<std::optional<std::pair<mepnet::NodeId, mepnet::EdgeId>>> prev(g.node_count());
        std::vector<bool> seen(g.node_count(), false);
        std::deque<mepnet::NodeId> queue{s};
        seen[s] = true;
        while (!queue.empty() && !seen[d]) {
            const auto u = queue.front();
            queue.pop_front();
            const auto nbrs = g.neighbors(u);
            const auto inc = g.incident(u);
            for (std::size_t i = 0; i < nbrs.size(); i++) {
                const auto v = nbrs[i];
                const auto& e = g.edge(inc[i]);
                const int dir = e.u == u ? 1 : -1;
                if (seen[v] || flow[inc[i]] == dir)
                    continue;
                seen[v] = true;
                prev[v] = std::make_pair(u, inc[i]);
                queue.push_back(v);
            }
        }
        if (!seen[d])
            return total;
        for (auto v = d; v != s;) {
            const auto [u, e] = *prev[v];
            flow[e] += g.edge(e).u == u ? 1 : -1;
            v = u;
        }
        total++;
    }
}

/// Seeded case generator for property tests.
class Cases
{
public:
    explicit Cases(std::uint64_t seed)
        :engine_(seed)
    {}

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double range(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    /// Unit values with extra weight on 0, 1 and the 2/3 noise boundary.
    double unit_with_edges()
    {
        switch (integer(0, 9)) {
        case 0: return 0.0;
        case 1: return 1.0;
        case 2: return 2.0 / 3.0;
        default: return unit();
        }
    }

    std::array<double, 4> simplex()
    {
        std::array<double, 4> w{};
        double sum = 0.0;
        for (double& x : w) {
            x = -std::log(1.0 - unit());
            sum += x;
        }
        for (double& x : w)
            x /= sum;
        return w;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace oracle
