#pragma once

#include <functional>
#include <optional>

#include "ehf/bitree.hpp"
#include "ehf/graph.hpp"

namespace ehf::oracle {

/// Chordless cycle of even length >= 4, listed in cyclic order.
struct EvenHoleCertificate {
    VertexSet cycle;
};

/// Empty string iff cert is a chordless even cycle of length >= 4 in g.
std::string validate(const Graph& g, const EvenHoleCertificate& cert);

/// Exact maximum independent set by branch and bound (highest-degree
/// branching, greedy lower bound, smallest-id ties). Exhaustive ground
/// truth for desk-scale graphs; requires n <= 64.
VertexSet brute_mis(const Graph& g);

/// Some even hole, or nullopt iff g is even-hole-free. Chordless-path DFS
/// with chordality pruning; exponential worst case, desk scale only.
std::optional<EvenHoleCertificate> find_even_hole(const Graph& g);

/// An independent set with exactly one vertex per part, or nullopt if none
/// exists. Exhaustive over the part product, pruned by independence.
std::optional<VertexSet> brute_transversal(const Graph& g, const CliquePartition& parts);

/// Every labeled bi-tree on m vertices exactly once: all labeled white
/// trees times all labeled in-arborescences (all roots).
void enumerate_bitrees(int m, const std::function<void(const bitree::BiTree&)>& emit);

/// Number of bi-trees enumerate_bitrees(m) yields: m^(m-2) * m^(m-1).
std::uint64_t bitree_count(int m);

} // namespace ehf::oracle
