#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "netres/graph.hpp"
#include "netres/rng.hpp"
#include "oracles.hpp"

using namespace netres;

namespace {

Graph path_graph(std::uint32_t n) {
    Graph g(n);
    for (NodeId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(std::uint32_t n) {
    Graph g(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph star_graph(std::uint32_t leaves) {
    Graph g(leaves + 1);
    for (NodeId i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

std::size_t degree_sum(const Graph& g) {
    std::size_t sum = 0;
    for (NodeId u : g.active_node_ids()) sum += g.degree(u);
    return sum;
}

}  // namespace

TEST_CASE("add_edge basics") {
    Graph g(2);
    g.add_edge(0, 1);
    CHECK(g.active_edges() == 1);
    g.add_edge(0, 1);  // idempotent
    g.add_edge(1, 0);
    CHECK(g.active_edges() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
}

TEST_CASE("add_edge rejects inactive endpoints") {
    Graph g(3);
    g.remove_node(2);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::invalid_argument);
}

TEST_CASE("make_edge_key canonicalizes and rejects self-loops") {
    EdgeKey e = make_edge_key(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK_THROWS_AS(make_edge_key(3, 3), std::invalid_argument);
}

TEST_CASE("remove_node: star collapse") {
    Graph g = star_graph(3);
    g.remove_node(0);
    CHECK(g.active_edges() == 0);
    CHECK(g.active_nodes() == 3);
    CHECK(g.connected_components().size() == 3);
}

TEST_CASE("remove_node: cut vertex splits a path") {
    Graph g = path_graph(3);
    g.remove_node(1);
    auto comps = g.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<NodeId>{0});
    CHECK(comps[1] == std::vector<NodeId>{2});
}

TEST_CASE("remove_node: K4 minus a vertex is K3") {
    // brute-force enumeration: removing any node leaves a triangle
    for (NodeId victim = 0; victim < 4; ++victim) {
        Graph g = complete_graph(4);
        g.remove_node(victim);
        CHECK(g.active_nodes() == 3);
        CHECK(g.active_edges() == 3);
        for (NodeId u : g.active_node_ids()) CHECK(g.degree(u) == 2);
    }
}

TEST_CASE("remove_node: double removal throws") {
    Graph g = path_graph(3);
    g.remove_node(1);
    CHECK_THROWS_AS(g.remove_node(1), std::invalid_argument);
}

TEST_CASE("remove_edge: triangle becomes a path, stays connected") {
    Graph g = complete_graph(3);
    g.remove_edge(0, 1);
    CHECK(g.active_edges() == 2);
    CHECK(g.connected_components().size() == 1);
}

TEST_CASE("remove_edge: bridge removal splits") {
    Graph g = path_graph(3);
    g.remove_edge(0, 1);
    auto comps = g.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<NodeId>{1, 2});
    CHECK(comps[1] == std::vector<NodeId>{0});
    CHECK(g.active_nodes() == 3);  // endpoints stay active
}

TEST_CASE("remove_edge: absent edge throws") {
    Graph g = path_graph(3);
    CHECK_THROWS_AS(g.remove_edge(0, 2), std::invalid_argument);
    g.remove_edge(0, 1);
    CHECK_THROWS_AS(g.remove_edge(0, 1), std::invalid_argument);
}

TEST_CASE("degree") {
    Graph k4 = complete_graph(4);
    for (NodeId u = 0; u < 4; ++u) CHECK(k4.degree(u) == 3);
    Graph g(2);
    CHECK(g.degree(0) == 0);
    g.remove_node(0);
    CHECK_THROWS_AS(g.degree(0), std::invalid_argument);
}

TEST_CASE("connected_components ordering and edge cases") {
    CHECK(Graph(0).connected_components().empty());

    Graph p5 = path_graph(5);
    auto comps = p5.connected_components();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 5);

    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    two.add_edge(0, 2);
    two.add_edge(3, 4);
    two.add_edge(4, 5);
    two.add_edge(3, 5);
    comps = two.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<NodeId>{0, 1, 2});  // tie broken by smallest member
    CHECK(comps[1] == std::vector<NodeId>{3, 4, 5});
}

TEST_CASE("largest_component") {
    Graph g(11);
    // sizes 5, 3, 3
    for (NodeId i = 0; i < 4; ++i) g.add_edge(i, i + 1);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(8, 9);
    g.add_edge(9, 10);
    auto lcc = g.largest_component();
    CHECK(lcc == std::vector<NodeId>{0, 1, 2, 3, 4});

    Graph connected = complete_graph(4);
    CHECK(connected.largest_component().size() == 4);

    Graph empty(0);
    CHECK_THROWS_AS(empty.largest_component(), std::invalid_argument);
}

TEST_CASE("random 20-node graph matches reachability oracle") {
    Rng rng(2024);
    Graph g(20);
    std::size_t placed = 0;
    while (placed < 15) {
        NodeId u = NodeId(rng.below(20));
        NodeId v = NodeId(rng.below(20));
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++placed;
    }
    CHECK(g.connected_components() == oracle::components(oracle::DenseGraph::from(g)));
}

TEST_CASE("property: invariants hold under random add/remove interleavings") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, 12);
        const int ops = int(rng.below(20));
        for (int k = 0; k < ops; ++k) {
            auto nodes = g.active_node_ids();
            auto edges = g.edges();
            const std::uint64_t action = rng.below(3);
            if (action == 0 && nodes.size() >= 2) {
                NodeId u = nodes[rng.below(nodes.size())];
                NodeId v = nodes[rng.below(nodes.size())];
                if (u != v) g.add_edge(u, v);
            } else if (action == 1 && !nodes.empty()) {
                g.remove_node(nodes[rng.below(nodes.size())]);
            } else if (action == 2 && !edges.empty()) {
                g.remove_edge(edges[rng.below(edges.size())]);
            }

            // symmetry
            for (NodeId u : g.active_node_ids()) {
                for (NodeId w : g.neighbors(u)) {
                    CHECK(g.has_edge(w, u));
                }
            }
            // m == half the degree sum
            CHECK(degree_sum(g) == 2 * g.active_edges());

            // components partition the active nodes and match the oracle
            auto comps = g.connected_components();
            std::size_t covered = 0;
            for (const auto& c : comps) covered += c.size();
            CHECK(covered == g.active_nodes());
            CHECK(comps == oracle::components(oracle::DenseGraph::from(g)));
        }
    }
}

TEST_CASE("property: LCC size never grows under a single removal") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, 12);
        if (g.active_nodes() == 0) continue;
        const std::size_t before = g.largest_component().size();
        auto nodes = g.active_node_ids();
        auto edges = g.edges();
        if (!edges.empty() && rng.chance(0.5)) {
            g.remove_edge(edges[rng.below(edges.size())]);
        } else {
            g.remove_node(nodes[rng.below(nodes.size())]);
        }
        const std::size_t after = g.active_nodes() == 0 ? 0 : g.largest_component().size();
        CHECK(after <= before);
    }
}
