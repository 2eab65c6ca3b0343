#include <doctest.h>

#include "ehf/graph.hpp"
#include "test_util.hpp"

using namespace ehf;
using test::complete_graph;
using test::cycle_graph;
using test::path_graph;
using test::random_graph;

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, std::vector<std::pair<Vertex, Vertex>>{{0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, std::vector<std::pair<Vertex, Vertex>>{{0, 3}}),
                    std::invalid_argument);
    Graph g(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}});
    CHECK(g.num_edges() == 1); // duplicates collapse
}

TEST_CASE("induced subgraph") {
    Graph c4 = cycle_graph(4);
    auto sub = induced_subgraph(c4, {0, 1, 2});
    CHECK(sub.graph.num_vertices() == 3);
    CHECK(sub.graph.num_edges() == 2);
    CHECK(sub.orig == VertexSet{0, 1, 2});
    CHECK(sub.graph.adjacent(0, 1));
    CHECK(sub.graph.adjacent(1, 2));
    CHECK_FALSE(sub.graph.adjacent(0, 2));

    auto empty = induced_subgraph(c4, {});
    CHECK(empty.graph.num_vertices() == 0);

    Graph k5 = complete_graph(5);
    auto tri = induced_subgraph(k5, {0, 2, 4});
    CHECK(tri.graph.num_edges() == 3);

    CHECK_THROWS_AS(induced_subgraph(c4, {0, 7}), std::invalid_argument);
}

TEST_CASE("induced subgraph composes") {
    Graph g = random_graph(9, 0.4, 11);
    VertexSet s{0, 2, 3, 5, 7, 8};
    VertexSet t_orig{2, 5, 8};
    auto on_s = induced_subgraph(g, s);
    // t in s-coordinates
    VertexSet t_sub;
    for (std::size_t i = 0; i < on_s.orig.size(); ++i)
        for (Vertex v : t_orig)
            if (on_s.orig[i] == v) t_sub.push_back(static_cast<Vertex>(i));
    auto nested = induced_subgraph(on_s.graph, t_sub);
    auto direct = induced_subgraph(g, t_orig);
    CHECK(nested.graph.num_vertices() == direct.graph.num_vertices());
    CHECK(nested.graph.edges() == direct.graph.edges());
}

TEST_CASE("independence and cliques") {
    Graph c4 = cycle_graph(4);
    CHECK(is_independent(c4, {0, 2}));
    CHECK_FALSE(is_independent(complete_graph(3), {0, 1}));
    CHECK(is_independent(c4, {3}));

    CHECK(is_clique(complete_graph(4), {0, 1, 2, 3}));
    Graph c5 = cycle_graph(5);
    CHECK(is_clique(c5, {1, 2}));
    CHECK_FALSE(is_clique(c5, {0, 1, 2}));

    CHECK_THROWS_AS(is_independent(c4, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(is_clique(c4, {9}), std::invalid_argument);
}

TEST_CASE("induces_forest") {
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(induces_forest(c4, {0, 1, 2, 3}));
    CHECK(induces_forest(c4, {0, 1, 2}));
    Graph p5 = path_graph(5);
    CHECK(induces_forest(p5, {0, 1, 2, 3, 4}));
    CHECK(induces_forest(p5, {}));
}

TEST_CASE("connected components") {
    Graph two_edges(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
    auto blocks = connected_components(two_edges);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == VertexSet{0, 1});
    CHECK(blocks[1] == VertexSet{2, 3});

    CHECK(connected_components(cycle_graph(6)).size() == 1);
    CHECK(connected_components(Graph(4)).size() == 4);
}

TEST_CASE("independent sets induce forests") {
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
        Graph g = random_graph(10, 0.3, seed);
        // greedy independent set
        VertexSet s;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            bool ok = true;
            for (Vertex u : s)
                if (g.adjacent(u, v)) ok = false;
            if (ok) s.push_back(v);
        }
        REQUIRE(is_independent(g, s));
        CHECK(induces_forest(g, s));
    }
}

TEST_CASE("clique and independent simultaneously means at most one vertex") {
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(8, 0.5, seed + 100);
        std::mt19937 rng(seed);
        for (int trial = 0; trial < 20; ++trial) {
            VertexSet s;
            for (Vertex v = 0; v < 8; ++v)
                if (rng() % 3 == 0) s.push_back(v);
            if (is_clique(g, s) && is_independent(g, s)) CHECK(s.size() <= 1);
            if (s.size() <= 1) {
                CHECK(is_clique(g, s));
                CHECK(is_independent(g, s));
            }
        }
    }
}

TEST_CASE("clique partition validation") {
    Graph k4 = complete_graph(4);
    CHECK_NOTHROW(check_clique_partition(k4, {{0, 1}, {2, 3}}));
    CHECK_THROWS(check_clique_partition(k4, {{0, 1}, {1, 2}}));
    CHECK_THROWS(check_clique_partition(cycle_graph(4), {{0, 2}}));
    CHECK_THROWS(check_clique_partition(k4, {{}}));
}
