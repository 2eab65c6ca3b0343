#pragma once

#include <optional>

#include "ehf/graph.hpp"

namespace ehf {

struct EliminationOrdering {
    /// Permutation of 0..n-1; valid iff every vertex's later neighbors form a clique.
    std::vector<Vertex> order;
};

/// Exact check of the elimination-ordering invariant.
bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& eo);

/// Maximum cardinality search candidate ordering, verified before being
/// returned; nullopt iff g is not chordal. Ties break on smallest id.
std::optional<EliminationOrdering> perfect_elimination_ordering(const Graph& g);

bool is_chordal(const Graph& g);

/// Maximum independent set of a chordal graph: greedy sweep over a perfect
/// elimination ordering. Throws std::invalid_argument on non-chordal input.
VertexSet chordal_mis(const Graph& g);

} // namespace ehf
