#include "mepnet/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

using namespace mepnet;

namespace
{

std::string
serialize(const NetworkGraph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

void
check_simple(const NetworkGraph& g)
{
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : g.edges()) {
        REQUIRE(e.u < e.v);
        REQUIRE(e.v < g.node_count());
        REQUIRE(seen.insert({e.u, e.v}).second);
    }
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); u++)
        degree_sum += g.degree(u);
    REQUIRE(degree_sum == 2 * g.edge_count());
}

/// Distance from each node to the nearest node below full lattice degree.
std::vector<int>
boundary_distance(const NetworkGraph& g)
{
    const auto full = static_cast<std::size_t>(lattice_degree(g.topology()));
    std::vector<int> best(g.node_count(), -1);
    for (NodeId b = 0; b < g.node_count(); b++) {
        if (g.degree(b) >= full)
            continue;
        const auto d = oracle::bfs(g, b);
        for (NodeId u = 0; u < g.node_count(); u++) {
            if (d[u] >= 0 && (best[u] < 0 || d[u] < best[u]))
                best[u] = d[u];
        }
    }
    return best;
}

}  // anon

TEST_CASE("topology names round trip")
{
    for (auto k : {TopologyKind::kRN, TopologyKind::kBAN, TopologyKind::kTLN, TopologyKind::kSLN, TopologyKind::kHLN})
        CHECK(parse_topology(topology_name(k)) == k);
    CHECK_THROWS_AS(parse_topology("XYZ"), std::invalid_argument);
    CHECK(lattice_degree(TopologyKind::kTLN) == 6);
    CHECK(lattice_degree(TopologyKind::kSLN) == 4);
    CHECK(lattice_degree(TopologyKind::kHLN) == 3);
}

TEST_CASE("from_edges rejects non-simple input")
{
    CHECK_THROWS_AS(NetworkGraph::from_edges(TopologyKind::kRN, 3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkGraph::from_edges(TopologyKind::kRN, 3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkGraph::from_edges(TopologyKind::kRN, 3, {{0, 5}}), std::invalid_argument);
    const auto g = NetworkGraph::from_edges(TopologyKind::kRN, 3, {{2, 1}, {0, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.find_edge(1, 2).has_value());
    CHECK(g.find_edge(2, 1) == g.find_edge(1, 2));
    CHECK_FALSE(g.find_edge(0, 2).has_value());
}

TEST_CASE("random graph G(n, m)")
{
    const auto g = build_random(10000, 50000, 7);
    CHECK(g.node_count() == 10000);
    CHECK(g.edge_count() == 50000);
    CHECK(2.0 * g.edge_count() / g.node_count() == 10.0);
    check_simple(g);

    const auto tri = build_random(3, 3, 1);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.degree(0) == 2);
    CHECK(tri.degree(1) == 2);
    CHECK(tri.degree(2) == 2);

    CHECK_THROWS_AS(build_random(3, 4, 1), std::invalid_argument);
    CHECK(serialize(build_random(500, 2000, 42)) == serialize(build_random(500, 2000, 42)));
    CHECK(serialize(build_random(500, 2000, 42)) != serialize(build_random(500, 2000, 43)));
}

TEST_CASE("Barabasi-Albert graph")
{
    const auto g = build_barabasi_albert(10000, 5, 3);
    CHECK(g.edge_count() == 15 + (10000 - 6) * 5);
    check_simple(g);

    const auto k10 = build_barabasi_albert(10, 9, 1);
    CHECK(k10.edge_count() == 45);
    CHECK_THROWS_AS(build_barabasi_albert(10, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_barabasi_albert(10, 0, 1), std::invalid_argument);
    CHECK(serialize(build_barabasi_albert(300, 3, 9)) == serialize(build_barabasi_albert(300, 3, 9)));
}

TEST_CASE("preferential attachment has a heavier degree tail than G(n, m)")
{
    int heavier = 0;
    for (std::uint64_t seed = 0; seed < 10; seed++) {
        const auto ba = build_barabasi_albert(2000, 5, seed);
        const auto rn = build_random(2000, ba.edge_count(), seed);
        heavier += ba.max_degree() > 2 * rn.max_degree();
    }
    CHECK(heavier == 10);
}

TEST_CASE("lattice sizes and degrees")
{
    const auto sln = build_square(100, 100);
    CHECK(sln.node_count() == 10000);
    CHECK(sln.edge_count() == 2 * 100 * 99);
    CHECK(sln.max_degree() == 4);

    const auto tln = build_triangular(100, 100);
    CHECK(tln.node_count() == 10000);
    CHECK(tln.edge_count() == 2 * 100 * 99 + 99 * 99);
    CHECK(tln.max_degree() == 6);

    const auto hln = build_hexagonal(100, 100);
    CHECK(hln.node_count() == 10000);
    CHECK(hln.edge_count() == 100 * 99 + 99 * 50);
    CHECK(hln.max_degree() == 3);

    for (const auto* g : {&sln, &tln, &hln}) {
        check_simple(*g);
        for (NodeId u : g->interior_nodes())
            REQUIRE(g->degree(u) == static_cast<std::size_t>(lattice_degree(g->topology())));
    }
    CHECK_THROWS_AS(build_square(2, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_lattice(TopologyKind::kRN, 10, 10), std::invalid_argument);
}

TEST_CASE("hexagonal lattice has girth 6 and is bipartite")
{
    const auto g = build_hexagonal(12, 12);
    std::vector<int> side(g.node_count(), -1);
    side[0] = 0;
    const auto d = oracle::bfs(g, 0);
    for (const Edge& e : g.edges())
        REQUIRE((d[e.u] + d[e.v]) % 2 == 1);
    // no 4-cycles: two nodes share at most one neighbor
    for (NodeId u = 0; u < g.node_count(); u++) {
        for (NodeId v = u + 1; v < g.node_count(); v++) {
            int common = 0;
            for (NodeId a : g.neighbors(u))
                for (NodeId b : g.neighbors(v))
                    common += a == b;
            REQUIRE(common <= 1);
        }
    }
}

TEST_CASE("interior flags honour the margin")
{
    for (auto kind : {TopologyKind::kTLN, TopologyKind::kSLN, TopologyKind::kHLN}) {
        for (int margin : {1, 3, 6}) {
            const auto g = build_lattice(kind, 30, 30, margin);
            const auto dist = boundary_distance(g);
            std::size_t count = 0;
            for (NodeId u = 0; u < g.node_count(); u++) {
                REQUIRE(g.is_interior(u) == (dist[u] >= margin));
                count += g.is_interior(u);
            }
            CHECK(count == g.interior_nodes().size());
            CHECK(count > 0);
        }
    }
    const auto g = build_square(20, 20, 2);
    CHECK(g.with_interior_margin(5).interior_nodes().size() < g.interior_nodes().size());
}

TEST_CASE("edge concurrence assignment")
{
    const auto g = build_random(5000, 20000, 1);
    const auto dist = EdgeDistribution::from_moments(0.97, 0.98, 0.99);
    const auto a = assign_edge_concurrence(g, dist, 5);
    double sum = 0.0;
    for (const Edge& e : a.edges()) {
        REQUIRE(e.concurrence >= 0.97);
        REQUIRE(e.concurrence <= 0.99);
        sum += e.concurrence;
    }
    const double mean = sum / a.edge_count();
    const double se = (0.02 / std::sqrt(12.0)) / std::sqrt(static_cast<double>(a.edge_count()));
    CHECK(std::abs(mean - 0.98) <= 3 * se);
    CHECK(serialize(a) == serialize(assign_edge_concurrence(g, dist, 5)));

    const auto h = assign_edge_concurrence(g, EdgeDistribution::homogeneous(0.98), 5);
    for (const Edge& e : h.edges())
        REQUIRE(e.concurrence == EdgeDistribution::homogeneous(0.98).mean());

    const auto perfect = assign_edge_concurrence(g, EdgeDistribution::homogeneous(1.0), 5);
    for (const Edge& e : perfect.edges())
        REQUIRE(e.concurrence == 1.0);

    CHECK_THROWS_AS(assign_edge_concurrence(NetworkGraph::from_edges(TopologyKind::kRN, 3, {}), dist, 1),
                    std::invalid_argument);
}

TEST_CASE("edge list round trip")
{
    const auto g = assign_edge_concurrence(build_random(200, 600, 9), EdgeDistribution::from_moments(0.97, 0.98, 0.99), 2);
    const std::string text = serialize(g);
    CHECK(text.rfind("# topology=RN n=200 seed=9\n", 0) == 0);
    std::istringstream in(text);
    const auto back = read_edge_list(in);
    CHECK(back.node_count() == 200);
    CHECK(back.edge_count() == 600);
    CHECK(serialize(back) == text);
    for (std::size_t i = 0; i < g.edge_count(); i++)
        REQUIRE(std::abs(back.edges()[i].concurrence - g.edges()[i].concurrence) <= 1e-9);
}

TEST_CASE("edge list errors name the line")
{
    std::istringstream no_header("0 1 0.9\n");
    CHECK_THROWS_WITH_AS(read_edge_list(no_header), doctest::Contains("line 1"), std::runtime_error);
    std::istringstream bad_row("# topology=RN n=3 seed=0\n0 1 0.9\n1 x\n");
    CHECK_THROWS_WITH_AS(read_edge_list(bad_row), doctest::Contains("line 3"), std::runtime_error);
}
