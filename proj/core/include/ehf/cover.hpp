#pragma once

#include <optional>
#include <variant>

#include "ehf/graph.hpp"

namespace ehf::cover {

/// Either an independent set of the requested size, or a clique cover of
/// the whole vertex set by at most 2^(k-1)-1 cliques.
struct CoverOrIS {
    std::variant<VertexSet, std::vector<VertexSet>> result;

    bool is_independent_set() const { return result.index() == 0; }
    const VertexSet& independent_set() const { return std::get<0>(result); }
    const std::vector<VertexSet>& cliques() const { return std::get<1>(result); }
};

struct Options {
    int threads = 1;
    std::ostream* trace = nullptr;
};

/// Inductive cover-or-independent-set procedure. Requires k >= 2 and a
/// C4-free graph; a supposed clique failing verification (which certifies
/// a C4) raises invariant_violation.
CoverOrIS cover_or_is(const Graph& g, int k);

/// Disjointify a clique cover: each vertex goes to the first clique that
/// contains it, emptied cliques are dropped.
CliquePartition partition_from_cover(const std::vector<VertexSet>& cover, const Graph& g);

/// Independent set of size k in an even-hole-free graph, or nullopt when
/// alpha(g) < k. Even-hole-freeness is a documented precondition and is
/// not verified here.
std::optional<VertexSet> isehf_solve(const Graph& g, int k, const Options& opts = {});

} // namespace ehf::cover
