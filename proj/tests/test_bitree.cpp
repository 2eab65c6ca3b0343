#include <doctest.h>

#include "ehf/bitree.hpp"
#include "ehf/oracle.hpp"

using namespace ehf;
using bitree::BiTree;
using bitree::make_bitree;

namespace {

// Canonical bi-path on labels 1..n with the given split.
BiTree canonical_bipath(int n, int t) {
    std::vector<std::pair<int, int>> white{{1, n}};
    for (int i = 2; i <= t; ++i) white.emplace_back(1, i);
    for (int j = t + 1; j <= n - 1; ++j) white.emplace_back(j, n);
    std::vector<std::pair<int, int>> red;
    for (int i = 1; i < n; ++i) red.emplace_back(i, i + 1);
    return make_bitree(n, white, red, n);
}

// Brute-force separation existence: every vertex against every nonempty
// bipartition of the rest.
bool separation_exists_brute(const BiTree& t) {
    for (int v = 1; v <= t.m; ++v) {
        std::vector<int> rest;
        for (int u = 1; u <= t.m; ++u)
            if (u != v) rest.push_back(u);
        if (rest.size() < 2) continue;
        for (std::uint32_t mask = 1; mask + 1 < (1u << rest.size()); ++mask) {
            bitree::Separation s;
            s.v = v;
            for (std::size_t i = 0; i < rest.size(); ++i)
                (mask >> i & 1 ? s.X : s.Y).push_back(rest[i]);
            if (bitree::validate(t, s).empty()) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("bi-tree validation") {
    CHECK(bitree::validate(make_bitree(2, {{1, 2}}, {{1, 2}}, 2)).empty());
    CHECK(bitree::validate(make_bitree(3, {{1, 2}, {1, 3}}, {{1, 3}, {2, 1}}, 3)).empty());

    BiTree missing_white = make_bitree(3, {{1, 2}}, {{1, 3}, {2, 1}}, 3);
    CHECK_FALSE(bitree::validate(missing_white).empty());

    BiTree red_cycleish = make_bitree(3, {{1, 2}, {2, 3}}, {{1, 2}}, 3);
    CHECK_FALSE(bitree::validate(red_cycleish).empty()); // vertex 2 lacks an out-arc
}

TEST_CASE("find_separation") {
    // both structures star at 3
    BiTree star = make_bitree(3, {{1, 3}, {2, 3}}, {{1, 3}, {2, 3}}, 3);
    auto sep = bitree::find_separation(star);
    REQUIRE(sep.has_value());
    CHECK(sep->v == 3);
    CHECK(sep->X == std::vector<int>{1});
    CHECK(sep->Y == std::vector<int>{2});
    CHECK(bitree::validate(star, *sep).empty());

    // bi-path with t=1: white {13, 23}, red chain
    BiTree bp = make_bitree(3, {{1, 3}, {2, 3}}, {{1, 2}, {2, 3}}, 3);
    CHECK_FALSE(bitree::find_separation(bp).has_value());
    CHECK_FALSE(separation_exists_brute(bp));

    BiTree tiny = make_bitree(2, {{1, 2}}, {{1, 2}}, 2);
    CHECK_FALSE(bitree::find_separation(tiny).has_value());
}

TEST_CASE("find_separation agrees with brute bipartitions") {
    oracle::enumerate_bitrees(4, [&](const BiTree& t) {
        auto sep = bitree::find_separation(t);
        CHECK(sep.has_value() == separation_exists_brute(t));
        if (sep) CHECK(bitree::validate(t, *sep).empty());
    });
}

TEST_CASE("directed obstruction") {
    BiTree star = make_bitree(3, {{1, 2}, {2, 3}}, {{1, 3}, {2, 3}}, 3);
    auto obs = bitree::find_directed_obstruction(star);
    REQUIRE(obs.has_value());
    CHECK(obs->a == 1);
    CHECK(obs->b == 2);
    CHECK(obs->v == 3);
    CHECK(bitree::validate(star, *obs).empty());

    for (int n = 2; n <= 6; ++n)
        for (int t = 1; t <= n - 1; ++t) {
            BiTree bp = canonical_bipath(n, t);
            REQUIRE(bitree::validate(bp).empty());
            CHECK_FALSE(bitree::find_directed_obstruction(bp).has_value());
        }

    BiTree tiny = make_bitree(2, {{1, 2}}, {{1, 2}}, 2);
    CHECK_FALSE(bitree::find_directed_obstruction(tiny).has_value());
}

TEST_CASE("two-leg spider is not obstructed under the strict reading") {
    // white path a-v-b with both red legs into v
    BiTree spider = make_bitree(3, {{1, 3}, {2, 3}}, {{1, 3}, {2, 3}}, 3);
    CHECK_FALSE(bitree::find_directed_obstruction(spider).has_value());
    CHECK_FALSE(bitree::find_alternating_obstruction(spider).has_value());
    CHECK(bitree::as_bispider(spider).has_value());
}

TEST_CASE("alternating obstruction") {
    BiTree t = make_bitree(4, {{1, 2}, {2, 3}, {3, 4}}, {{2, 3}, {1, 3}, {4, 1}}, 3);
    REQUIRE(bitree::validate(t).empty());
    auto obs = bitree::find_alternating_obstruction(t);
    REQUIRE(obs.has_value());
    CHECK(bitree::validate(t, *obs).empty());

    for (int n = 2; n <= 6; ++n)
        for (int split = 1; split <= n - 1; ++split)
            CHECK_FALSE(
                bitree::find_alternating_obstruction(canonical_bipath(n, split)).has_value());

    BiTree three = make_bitree(3, {{1, 2}, {2, 3}}, {{1, 2}, {2, 3}}, 3);
    CHECK_FALSE(bitree::find_alternating_obstruction(three).has_value());
}

TEST_CASE("as_bipath") {
    auto c1 = bitree::as_bipath(make_bitree(2, {{1, 2}}, {{1, 2}}, 2));
    REQUIRE(c1.has_value());
    CHECK(c1->order == std::vector<int>{1, 2});
    CHECK(c1->t == 1);

    auto c2 = bitree::as_bipath(make_bitree(3, {{1, 3}, {1, 2}}, {{1, 2}, {2, 3}}, 3));
    REQUIRE(c2.has_value());
    CHECK(c2->order == std::vector<int>{1, 2, 3});
    CHECK(c2->t == 2);

    CHECK_FALSE(bitree::as_bipath(make_bitree(3, {{1, 3}, {2, 3}}, {{1, 3}, {2, 3}}, 3)).has_value());

    for (int n = 2; n <= 6; ++n)
        for (int t = 1; t <= n - 1; ++t) {
            auto cert = bitree::as_bipath(canonical_bipath(n, t));
            REQUIRE(cert.has_value());
            CHECK(cert->t == t);
            CHECK(bitree::validate(canonical_bipath(n, t), *cert).empty());
        }
}

TEST_CASE("as_bispider") {
    auto star = bitree::as_bispider(make_bitree(3, {{1, 3}, {2, 3}}, {{1, 3}, {2, 3}}, 3));
    REQUIRE(star.has_value());
    CHECK(star->legs.size() == 2);
    CHECK(bitree::validate(make_bitree(3, {{1, 3}, {2, 3}}, {{1, 3}, {2, 3}}, 3), *star).empty());

    for (int n = 2; n <= 5; ++n) {
        auto one_leg = bitree::as_bispider(canonical_bipath(n, 1));
        REQUIRE(one_leg.has_value());
        CHECK(one_leg->legs.size() == 1);
    }

    BiTree alt = make_bitree(4, {{1, 2}, {2, 3}, {3, 4}}, {{2, 3}, {1, 3}, {4, 1}}, 3);
    CHECK_FALSE(bitree::as_bispider(alt).has_value());
}

TEST_CASE("a bi-path is a one-leg bi-spider") {
    oracle::enumerate_bitrees(4, [&](const BiTree& t) {
        auto bp = bitree::as_bipath(t);
        if (!bp) return;
        auto sp = bitree::as_bispider(t);
        REQUIRE(sp.has_value());
        CHECK(sp->legs.size() == 1);
        CHECK(sp->legs[0].t == bp->t);
    });
}

TEST_CASE("glue") {
    BiTree leg = make_bitree(2, {{1, 2}}, {{1, 2}}, 2);
    BiTree spider = bitree::glue(leg, 2, leg);
    CHECK(spider.m == 3);
    CHECK(spider.root == 2);
    CHECK(bitree::validate(spider).empty());
    REQUIRE(bitree::as_bispider(spider).has_value());
    CHECK(bitree::as_bispider(spider)->legs.size() == 2);

    // glue then restrict away the second tree recovers the first
    std::vector<BiTree> pool;
    oracle::enumerate_bitrees(3, [&](const BiTree& t) { pool.push_back(t); });
    int glued = 0;
    for (std::size_t i = 0; i < pool.size() && glued < 100; ++i)
        for (std::size_t j = 0; j < pool.size() && glued < 100; j += 2) {
            const BiTree& t1 = pool[i];
            const BiTree& t2 = pool[j];
            int v = static_cast<int>(i % t1.m) + 1;
            BiTree g = bitree::glue(t1, v, t2);
            CHECK(bitree::validate(g).empty());
            std::vector<int> keep;
            for (int u = 1; u <= t1.m; ++u) keep.push_back(u);
            auto back = bitree::restrict(g, keep);
            CHECK(back.tree.white == t1.white);
            CHECK(back.tree.red_parent == t1.red_parent);
            CHECK(back.tree.root == t1.root);
            ++glued;
        }
    CHECK(glued == 100);
}

TEST_CASE("restrict") {
    BiTree spider = make_bitree(3, {{1, 3}, {2, 3}}, {{1, 3}, {2, 3}}, 3);
    auto r = bitree::restrict(spider, {3, 1});
    CHECK(r.tree.m == 2);
    CHECK(r.orig == std::vector<int>{0, 1, 3});
    CHECK(bitree::as_bipath(r.tree).has_value());

    auto all = bitree::restrict(spider, {1, 2, 3});
    CHECK(all.tree.white == spider.white);
    CHECK(all.tree.root == spider.root);

    // dropping the middle of a chain disconnects the induced white tree
    BiTree chain = canonical_bipath(3, 2);
    CHECK_THROWS_AS(bitree::restrict(chain, {1, 3}), invariant_violation);
}

TEST_CASE("find_bispider_separation isolates a glued leg") {
    // bi-path (1,2,3; t=1) with a fresh leg glued at 2
    BiTree t = make_bitree(4, {{1, 3}, {2, 3}, {2, 4}}, {{1, 2}, {2, 3}, {4, 2}}, 3);
    REQUIRE(bitree::validate(t).empty());
    REQUIRE_FALSE(bitree::as_bispider(t).has_value());
    auto bs = bitree::find_bispider_separation(t);
    REQUIRE(bs.has_value());
    CHECK(bitree::validate(t, bs->sep).empty());
    // root stays on the Y side
    CHECK(std::find(bs->sep.Y.begin(), bs->sep.Y.end(), t.root) != bs->sep.Y.end());
    // (a) the kept side is a bi-spider
    CHECK(bitree::validate(bs->spider, bs->decomp).empty());
    // (b) v is a red or white leaf of t minus X
    std::vector<int> keep = bs->sep.Y;
    keep.push_back(bs->sep.v);
    auto rest = bitree::restrict(t, keep);
    int v_new = 0;
    for (std::size_t l = 1; l < rest.orig.size(); ++l)
        if (rest.orig[l] == bs->sep.v) v_new = static_cast<int>(l);
    bool red_leaf = true;
    for (int u = 1; u <= rest.tree.m; ++u)
        if (rest.tree.red_parent[u] == v_new) red_leaf = false;
    int white_deg = 0;
    for (auto [a, b] : rest.tree.white)
        if (a == v_new || b == v_new) ++white_deg;
    CHECK((red_leaf || white_deg == 1));
}

TEST_CASE("find_bispider_separation rejects bi-spiders and obstructed trees") {
    CHECK_THROWS_AS(bitree::find_bispider_separation(canonical_bipath(3, 1)),
                    std::invalid_argument);
    BiTree star = make_bitree(3, {{1, 2}, {2, 3}}, {{1, 3}, {2, 3}}, 3);
    REQUIRE(bitree::find_directed_obstruction(star).has_value());
    CHECK_THROWS_AS(bitree::find_bispider_separation(star), std::invalid_argument);
}

TEST_CASE("exhaustive: no separation and no obstruction implies bi-path (m <= 4)") {
    for (int m = 2; m <= 4; ++m) {
        oracle::enumerate_bitrees(m, [&](const BiTree& t) {
            if (bitree::as_bipath(t)) return; // implication holds either way
            bool no_sep = !bitree::find_separation(t).has_value();
            bool no_obs = !bitree::find_directed_obstruction(t).has_value() &&
                          !bitree::find_alternating_obstruction(t).has_value();
            CHECK_FALSE((no_sep && no_obs));
        });
    }
}

TEST_CASE("exhaustive: obstruction-free bi-trees decompose (m <= 4)") {
    for (int m = 2; m <= 4; ++m) {
        oracle::enumerate_bitrees(m, [&](const BiTree& t) {
            if (bitree::find_directed_obstruction(t) || bitree::find_alternating_obstruction(t))
                return;
            if (bitree::as_bispider(t)) return;
            auto bs = bitree::find_bispider_separation(t);
            REQUIRE(bs.has_value());
            CHECK(bitree::validate(t, bs->sep).empty());
            CHECK(bitree::validate(bs->spider, bs->decomp).empty());
        });
    }
}
