#include <doctest.h>

#include <sstream>

#include "ehf/chordal.hpp"
#include "ehf/gen.hpp"
#include "ehf/io.hpp"
#include "ehf/oracle.hpp"

using namespace ehf;

namespace {

std::string graph_digest(const Graph& g) {
    std::ostringstream ss;
    io::write_graph(ss, g);
    return io::fnv1a_hex(ss.str());
}

} // namespace

TEST_CASE("gen_chordal extremes") {
    Graph empty = gen::gen_chordal(8, 0.0, 1);
    CHECK(empty.num_edges() == 0);
    CHECK(is_chordal(empty));

    Graph full = gen::gen_chordal(7, 1.0, 1);
    CHECK(full.num_edges() == 21);
}

TEST_CASE("gen_chordal outputs are chordal and even-hole-free") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = gen::gen_chordal(6 + seed % 12, 0.2 + 0.07 * (seed % 9), seed);
        CHECK(is_chordal(g));
        CHECK_FALSE(oracle::find_even_hole(g).has_value());
    }
}

TEST_CASE("gen_chordal determinism and regression pin") {
    Graph a = gen::gen_chordal(12, 0.5, 7);
    Graph b = gen::gen_chordal(12, 0.5, 7);
    CHECK(a.edges() == b.edges());
    CHECK(graph_digest(a) == "317ce2b7c033e056");
}

TEST_CASE("gen_ehf extremes and postcondition") {
    CHECK(gen::gen_ehf(10, 0.0, 3).num_edges() == 0);
    for (std::uint32_t seed = 0; seed < 25; ++seed) {
        Graph g = gen::gen_ehf(8 + seed % 10, 0.2 + 0.08 * (seed % 8), seed);
        CHECK_FALSE(oracle::find_even_hole(g).has_value());
    }
}

TEST_CASE("gen_ehf determinism and regression pin") {
    Graph a = gen::gen_ehf(15, 0.3, 42);
    Graph b = gen::gen_ehf(15, 0.3, 42);
    CHECK(a.edges() == b.edges());
    CHECK(a.num_edges() == 22);
    CHECK(graph_digest(a) == "49abc2b47ab663cd");
}

TEST_CASE("gen_planted invariants") {
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        int k = 1 + static_cast<int>(seed % 5);
        auto pi = gen::gen_planted(k, 3 + seed % 3, 0.2, seed * 17 + 1);
        CHECK(pi.parts.size() == k + 1);
        check_clique_partition(pi.graph, pi.parts);
        CHECK(is_independent(pi.graph, pi.planted));
        CHECK(pi.planted.size() == pi.parts.size());
        CHECK_FALSE(oracle::find_even_hole(pi.graph).has_value());
        // one planted witness inside each part
        for (std::size_t p = 0; p < pi.parts.size(); ++p) {
            Vertex y = pi.planted_y[p + 1];
            CHECK(std::find(pi.parts[p].begin(), pi.parts[p].end(), y) != pi.parts[p].end());
        }
    }
}

TEST_CASE("gen_planted with no noise admits the planted transversal") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        auto pi = gen::gen_planted(2 + static_cast<int>(seed % 3), 4, 0.0, seed + 60);
        auto brute = oracle::brute_transversal(pi.graph, pi.parts);
        REQUIRE(brute.has_value());
        CHECK(brute->size() == pi.parts.size());
    }
}

TEST_CASE("gen_planted determinism and regression pin") {
    auto a = gen::gen_planted(3, 4, 0.2, 11);
    auto b = gen::gen_planted(3, 4, 0.2, 11);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.planted == b.planted);
    CHECK(a.seed_used == 11);
    CHECK(graph_digest(a.graph) == "9fecd93cdaf2185b");
}

TEST_CASE("gen parameter validation") {
    CHECK_THROWS_AS(gen::gen_chordal(-1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen::gen_chordal(5, 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen::gen_ehf(5, -0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen::gen_planted(0, 4, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen::gen_planted(3, 2, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen::gen_planted(3, 9, 0.1, 0), std::invalid_argument);
}
