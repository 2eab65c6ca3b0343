#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>

#include "ehf/bitree.hpp"
#include "ehf/tisehf.hpp"

namespace ehf::bispider {

struct Stats {
    std::atomic<std::uint64_t> gprime_checks{0};
    std::atomic<std::uint64_t> chordality_failures{0};
    std::atomic<std::uint64_t> witness_checks{0};
    std::atomic<std::uint64_t> witness_failures{0};
};
Stats& stats();
void reset_stats();

/// Per-leg part labels (ending at the root) and split values, extracted
/// from a bi-spider decomposition.
struct LegPlan {
    std::vector<std::vector<int>> leg_parts;
    std::vector<int> split;
};
LegPlan plan_from_decomp(const bitree::BiSpiderDecomp& d);

struct CandidateSet {
    VertexSet candidates; // ascending
    std::map<Vertex, VertexSet> witnesses;
};

/// Vertices of part p extendable to an independent transversal of
/// {p} + targets, with one witness each. Every target part must be
/// white-adjacent to p, which makes each candidate's conflict graph
/// chordal; a failed chordality check aborts the branch (nullopt).
std::optional<CandidateSet> extendable_set(const tisehf::Instance& inst, int p,
                                           const std::vector<int>& targets);

/// All root-part vertices extendable to a transversal of the whole
/// bi-spider, each with a full witness assembled from the per-leg phase.
std::optional<CandidateSet> all_root_candidates(const tisehf::Instance& inst,
                                                const bitree::BiSpiderDecomp& d,
                                                const LegPlan& plan);

/// Witness of the smallest root candidate, or nullopt.
std::optional<VertexSet> bispider_solve(const tisehf::Instance& inst,
                                        const bitree::BiSpiderDecomp& d, const LegPlan& plan);

/// Cut reduction across a separation: in every part of sep.X, delete the non-anchor
/// vertices with a neighbor in any part of sep.Y; nullopt when a part loses
/// all non-anchor vertices.
std::optional<tisehf::Instance> apply_bicut(const tisehf::Instance& inst,
                                            const bitree::Separation& sep);

} // namespace ehf::bispider
