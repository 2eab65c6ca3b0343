#include "ehf/cover.hpp"

#include <algorithm>
#include <ostream>

#include "ehf/parallel.hpp"
#include "ehf/tisehf.hpp"

namespace ehf::cover {

namespace {

// Lexicographically smallest non-adjacent pair within live, if any.
std::optional<std::pair<Vertex, Vertex>> nonadjacent_pair(const Graph& g, const VertexSet& live) {
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j)
            if (!g.adjacent(live[i], live[j])) return std::make_pair(live[i], live[j]);
    return std::nullopt;
}

CoverOrIS cover_or_is_rec(const Graph& g, const VertexSet& live, int k) {
    auto pair = nonadjacent_pair(g, live);
    if (!pair) {
        // live is a clique; one clique covers it (zero cliques when empty).
        std::vector<VertexSet> cover;
        if (!live.empty()) cover.push_back(live);
        return CoverOrIS{std::move(cover)};
    }
    auto [x, y] = *pair;
    if (k == 2) return CoverOrIS{VertexSet{x, y}};

    auto recurse_on_nonneighbors = [&](Vertex z) {
        VertexSet rest;
        for (Vertex v : live)
            if (v != z && !g.adjacent(v, z)) rest.push_back(v);
        return cover_or_is_rec(g, rest, k - 1);
    };

    CoverOrIS from_x = recurse_on_nonneighbors(x);
    if (from_x.is_independent_set()) {
        VertexSet is = from_x.independent_set();
        is.push_back(x);
        return CoverOrIS{sorted_copy(std::move(is))};
    }
    CoverOrIS from_y = recurse_on_nonneighbors(y);
    if (from_y.is_independent_set()) {
        VertexSet is = from_y.independent_set();
        is.push_back(y);
        return CoverOrIS{sorted_copy(std::move(is))};
    }

    VertexSet common;
    for (Vertex v : live)
        if (g.adjacent(v, x) && g.adjacent(v, y)) common.push_back(v);
    if (!is_clique(g, common))
        throw invariant_violation(
            "cover_or_is: common neighborhood is not a clique (input contains a C4)");

    std::vector<VertexSet> cover = from_x.cliques();
    for (auto& c : from_y.cliques()) cover.push_back(c);
    if (!common.empty()) cover.push_back(std::move(common));
    return CoverOrIS{std::move(cover)};
}

} // namespace

CoverOrIS cover_or_is(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("cover_or_is: k must be at least 2");
    VertexSet all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
    CoverOrIS result = cover_or_is_rec(g, all, k);
    if (result.is_independent_set()) {
        if (static_cast<int>(result.independent_set().size()) != k ||
            !is_independent(g, result.independent_set()))
            throw invariant_violation("cover_or_is: bad independent set");
    } else {
        std::vector<bool> covered(g.num_vertices(), false);
        for (const auto& c : result.cliques()) {
            if (!is_clique(g, c)) throw invariant_violation("cover_or_is: emitted non-clique");
            for (Vertex v : c) covered[v] = true;
        }
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!covered[v]) throw invariant_violation("cover_or_is: uncovered vertex");
        std::uint64_t bound = (std::uint64_t{1} << (k - 1)) - 1;
        if (result.cliques().size() > bound)
            throw invariant_violation("cover_or_is: clique bound exceeded");
    }
    return result;
}

CliquePartition partition_from_cover(const std::vector<VertexSet>& cover, const Graph& g) {
    std::vector<bool> assigned(g.num_vertices(), false);
    CliquePartition parts;
    for (const auto& clique : cover) {
        VertexSet part;
        for (Vertex v : clique) {
            g.check_vertex(v);
            if (!assigned[v]) {
                assigned[v] = true;
                part.push_back(v);
            }
        }
        if (!part.empty()) parts.push_back(sorted_copy(std::move(part)));
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!assigned[v])
            throw std::invalid_argument("partition_from_cover: vertex " + std::to_string(v) +
                                        " not covered");
    return parts;
}

std::optional<VertexSet> isehf_solve(const Graph& g, int k, const Options& opts) {
    if (k < 1) throw std::invalid_argument("isehf_solve: k must be at least 1");
    const int n = g.num_vertices();
    if (k == 1) {
        if (n == 0) return std::nullopt;
        return VertexSet{0};
    }

    CoverOrIS first = cover_or_is(g, k);
    if (first.is_independent_set()) return first.independent_set();

    CliquePartition parts = partition_from_cover(first.cliques(), g);
    const int m = static_cast<int>(parts.size());
    if (m < k) return std::nullopt;

    // A transversal cannot pick from two mutually complete parts.
    std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, true));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            bool ok = false;
            for (Vertex u : parts[a]) {
                for (Vertex v : parts[b])
                    if (!g.adjacent(u, v)) {
                        ok = true;
                        break;
                    }
                if (ok) break;
            }
            compatible[a][b] = ok;
            compatible[b][a] = ok;
        }

    // All k-subsets of parts, lexicographic.
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick;
    auto gen = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            subsets.push_back(pick);
            return;
        }
        for (int i = from; i < m; ++i) {
            bool ok = true;
            for (int p : pick)
                if (!compatible[p][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    gen(gen, 0);
    if (opts.trace)
        *opts.trace << "[isehf] k=" << k << " parts=" << m << " subsets=" << subsets.size() << "\n";

    // The subset fan-out is what parallelizes; per-branch solving stays
    // sequential so nested parallelism cannot oversubscribe.
    tisehf::Options topts{1, opts.threads > 1 ? nullptr : opts.trace};
    auto eval = [&](std::size_t idx) -> std::optional<VertexSet> {
        VertexSet universe;
        for (int p : subsets[idx])
            universe.insert(universe.end(), parts[p].begin(),
                            parts[p].end());
        auto ind = induced_subgraph(g, universe);
        std::vector<int> sub_id(g.num_vertices(), -1);
        for (std::size_t i = 0; i < ind.orig.size(); ++i) sub_id[ind.orig[i]] = static_cast<int>(i);
        CliquePartition sub_parts;
        for (int p : subsets[idx]) {
            VertexSet sp;
            for (Vertex v : parts[p]) sp.push_back(sub_id[v]);
            sub_parts.push_back(sorted_copy(std::move(sp)));
        }
        auto sub = tisehf::tisehf_solve(ind.graph, sub_parts, topts);
        if (!sub) return std::nullopt;
        VertexSet mapped;
        for (Vertex v : *sub) mapped.push_back(ind.orig[v]);
        return sorted_copy(std::move(mapped));
    };

    auto hit = first_hit<VertexSet>(subsets.size(), opts.threads, eval);
    if (!hit) return std::nullopt;
    if (static_cast<int>(hit->size()) != k || !is_independent(g, *hit))
        throw invariant_violation("isehf_solve: produced set failed verification");
    return hit;
}

} // namespace ehf::cover
