#include <doctest.h>

#include "ehf/chordal.hpp"
#include "ehf/gen.hpp"
#include "ehf/oracle.hpp"
#include "test_util.hpp"

using namespace ehf;
using test::complete_graph;
using test::cycle_graph;
using test::path_graph;
using test::random_graph;

TEST_CASE("perfect elimination ordering basics") {
    CHECK_FALSE(perfect_elimination_ordering(cycle_graph(4)).has_value());

    Graph p3 = path_graph(3);
    auto eo = perfect_elimination_ordering(p3);
    REQUIRE(eo.has_value());
    CHECK(is_perfect_elimination_ordering(p3, *eo));
    // explicit orderings from the definition
    CHECK(is_perfect_elimination_ordering(p3, EliminationOrdering{{0, 2, 1}}));
    CHECK_FALSE(is_perfect_elimination_ordering(p3, EliminationOrdering{{1, 0, 2}}));

    Graph k4 = complete_graph(4);
    CHECK(is_perfect_elimination_ordering(k4, EliminationOrdering{{2, 0, 3, 1}}));
}

TEST_CASE("chordality of named graphs") {
    CHECK_FALSE(is_chordal(cycle_graph(5)));
    CHECK_FALSE(is_chordal(cycle_graph(6)));
    CHECK(is_chordal(path_graph(7)));
    CHECK(is_chordal(complete_graph(5)));
    CHECK(is_chordal(Graph(4)));

    // C6 plus all short chords from vertex 0 (a fan) is chordal.
    Graph fan(6, std::vector<std::pair<Vertex, Vertex>>{
                     {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {0, 3}, {0, 4}});
    auto eo = perfect_elimination_ordering(fan);
    REQUIRE(eo.has_value());
    CHECK(is_perfect_elimination_ordering(fan, *eo));
}

TEST_CASE("is_chordal agrees with subset-based hole search") {
    int chordal_count = 0;
    for (std::uint32_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(8, 0.2 + 0.06 * (seed % 10), seed);
        bool has_hole = test::has_hole_by_subsets(g, false);
        CHECK(is_chordal(g) == !has_hole);
        if (!has_hole) ++chordal_count;
    }
    CHECK(chordal_count > 10); // the sample covers both outcomes
}

TEST_CASE("chordal_mis on named graphs") {
    CHECK(chordal_mis(path_graph(4)).size() == 2);
    CHECK(chordal_mis(complete_graph(6)).size() == 1);
    CHECK_THROWS_AS(chordal_mis(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("chordal_mis matches brute force on random chordal graphs") {
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = gen::gen_chordal(6 + seed % 9, 0.15 + 0.1 * (seed % 7), seed);
        REQUIRE(is_chordal(g));
        VertexSet mis = chordal_mis(g);
        CHECK(is_independent(g, mis));
        CHECK(mis.size() == oracle::brute_mis(g).size());
    }
}

TEST_CASE("chordal_mis is deterministic") {
    Graph g = gen::gen_chordal(12, 0.4, 99);
    CHECK(chordal_mis(g) == chordal_mis(g));
}
