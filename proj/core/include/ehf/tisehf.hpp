#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>

#include "ehf/bitree.hpp"
#include "ehf/graph.hpp"

namespace ehf::tisehf {

struct Options {
    int threads = 1;
    std::ostream* trace = nullptr;
};

/// Counters exposed for the acceptance suite; reset between runs.
struct Stats {
    std::atomic<std::uint64_t> bitree_loop_runs{0};
    std::atomic<std::uint64_t> bitree_loop_iterations{0};
    std::atomic<std::uint64_t> loop_bound_violations{0};
    std::atomic<std::uint64_t> white_branches{0};
    std::atomic<std::uint64_t> red_branches{0};
};
Stats& stats();
void reset_stats();

struct External {
    Vertex w = -1;
    int a = 0, b = 0; // the two part labels w is complete to
};

struct Part {
    VertexSet members;            // current content, anchor included
    std::optional<Vertex> anchor; // x_i; never a witness candidate
    int anchor_target = 0;        // r(i) as a part label; 0 = none
};

/// Parts carry 1-based labels matching the bi-tree vertex set; parts[0] is
/// unused. Inside the solver the root part always has the
/// highest label.
struct Instance {
    const Graph* g = nullptr;
    std::vector<Part> parts;
    std::vector<External> externals;

    int label_count() const { return static_cast<int>(parts.size()) - 1; }
    VertexSet eligible(int label) const;
};

Instance make_instance(const Graph& g, const CliquePartition& parts);

/// Empty string when the instance satisfies the transversal-instance
/// invariants (externals complete to exactly their two parts and forming a
/// white tree with the top label a leaf; anchors, when present, independent,
/// complete to their target part minus its anchor, non-adjacent elsewhere,
/// and forming a red in-arborescence rooted at the top label).
std::string check_hypotheses(const Instance& inst);

bitree::BiTree build_bitree(const Instance& inst);

/// All maps b: {1..k} -> {1..k+1}, b_i != i, whose edges {i,b_i} form a
/// spanning tree on {1..k+1}. Entry [0] of each map is unused.
std::vector<std::vector<int>> enumerate_white_structures(int k);

/// All maps r with arcs (i, r_i) forming an in-arborescence rooted at k+1.
std::vector<std::vector<int>> enumerate_red_structures(int k);

/// Externalize the transversal w (w[i] in part i, i = 1..k) under white
/// structure b: part b_i keeps only neighbors of w_i, every other part
/// drops them, and labels are swapped so the top label is a white-tree
/// leaf. nullopt when a part empties.
std::optional<Instance> clean_white(const Instance& pre, const std::vector<int>& b,
                                    const std::vector<Vertex>& w);

/// Record the transversal x (x[i] in part i) as anchors under red structure
/// r and clean: part r_i keeps neighbors of x_i plus its own anchor, other
/// parts drop neighbors of x_i. nullopt when a part loses all non-anchor
/// vertices (the top part: all vertices).
std::optional<Instance> clean_red(const Instance& inst, const std::vector<int>& r,
                                  const std::vector<Vertex>& x);

/// The bi-tree loop: obstruction check, bi-spider solve, or separation +
/// bi-cut + root-candidate reduction, at most k iterations.
std::optional<VertexSet> solve_bitree_instance(const Instance& inst, const Options& opts = {});

/// Transversal independent set of the given clique partition, or nullopt.
std::optional<VertexSet> tisehf_solve(const Graph& g, const CliquePartition& parts,
                                      const Options& opts = {});

/// Transversal containing parts[part_index]'s vertex v: deletes N(v) from
/// all other parts and recurses.
std::optional<VertexSet> solve_assuming_member(const Graph& g, const CliquePartition& parts,
                                               std::size_t part_index, Vertex v,
                                               const Options& opts = {});

/// The first-stage solution W: a transversal of all parts but the last.
std::optional<VertexSet> compute_disjoint_solution(const Graph& g, const CliquePartition& parts,
                                                   const Options& opts = {});

} // namespace ehf::tisehf
