#include "ehf/bispider.hpp"

#include <algorithm>

#include "ehf/chordal.hpp"

namespace ehf::bispider {

Stats& stats() {
    static Stats s;
    return s;
}

void reset_stats() {
    stats().gprime_checks = 0;
    stats().chordality_failures = 0;
    stats().witness_checks = 0;
    stats().witness_failures = 0;
}

LegPlan plan_from_decomp(const bitree::BiSpiderDecomp& d) {
    LegPlan plan;
    for (const auto& leg : d.legs) {
        plan.leg_parts.push_back(leg.order);
        plan.split.push_back(leg.t);
    }
    return plan;
}

namespace {

// Conflict graph for candidate y over the given (label, member-list) slots:
// non-anchor members not adjacent to y. Returns nullopt when the graph
// fails the chordality assertion.
struct SlotGraph {
    InducedSubgraph ind;
    std::vector<int> slot_of; // per subgraph vertex, index into slots
};

std::optional<SlotGraph> build_conflict_graph(const tisehf::Instance& inst, Vertex y,
                                              const std::vector<std::pair<int, const VertexSet*>>& slots) {
    const Graph& g = *inst.g;
    VertexSet verts;
    for (const auto& [label, members] : slots) {
        const auto& part = inst.parts[label];
        for (Vertex v : *members) {
            if (part.anchor && v == *part.anchor) continue;
            if (!g.adjacent(v, y)) verts.push_back(v);
        }
    }
    SlotGraph out{induced_subgraph(g, verts), {}};
    out.slot_of.assign(out.ind.orig.size(), -1);
    for (std::size_t i = 0; i < out.ind.orig.size(); ++i) {
        Vertex v = out.ind.orig[i];
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (std::find(slots[s].second->begin(), slots[s].second->end(), v) !=
                slots[s].second->end()) {
                out.slot_of[i] = static_cast<int>(s);
                break;
            }
    }
    ++stats().gprime_checks;
    if (!is_chordal(out.ind.graph)) {
        ++stats().chordality_failures;
        return std::nullopt;
    }
    return out;
}

// chordal_mis restricted check: one vertex per slot, returned per slot,
// or nullopt when the maximum misses a slot.
std::optional<std::vector<Vertex>> traverse_slots(const SlotGraph& sg, std::size_t slot_count) {
    VertexSet mis = chordal_mis(sg.ind.graph);
    if (mis.size() != slot_count) return std::nullopt;
    std::vector<Vertex> per_slot(slot_count, -1);
    for (Vertex sub : mis) {
        int s = sg.slot_of[sub];
        if (s < 0 || per_slot[s] != -1) return std::nullopt;
        per_slot[s] = sg.ind.orig[sub];
    }
    return per_slot;
}

} // namespace

std::optional<CandidateSet> extendable_set(const tisehf::Instance& inst, int p,
                                           const std::vector<int>& targets) {
    const Graph& g = *inst.g;
    CandidateSet out;
    std::vector<std::pair<int, const VertexSet*>> slots;
    for (int t : targets) slots.emplace_back(t, &inst.parts[t].members);

    for (Vertex y : inst.eligible(p)) {
        auto sg = build_conflict_graph(inst, y, slots);
        if (!sg) return std::nullopt;
        auto per_slot = traverse_slots(*sg, slots.size());
        if (!per_slot) continue;
        VertexSet witness{y};
        witness.insert(witness.end(), per_slot->begin(), per_slot->end());
        witness = sorted_copy(std::move(witness));
        if (!is_independent(g, witness))
            throw invariant_violation("extendable_set: witness is not independent");
        out.candidates.push_back(y);
        out.witnesses.emplace(y, std::move(witness));
    }
    return out;
}

std::optional<CandidateSet> all_root_candidates(const tisehf::Instance& inst,
                                                const bitree::BiSpiderDecomp& d,
                                                const LegPlan& plan) {
    const Graph& g = *inst.g;
    const std::size_t legs = plan.leg_parts.size();

    // Phase 1: per leg, the candidates of its far part across the lower
    // white fan.
    std::vector<CandidateSet> leg_candidates(legs);
    std::vector<VertexSet> reduced(legs); // surviving far-part vertices
    for (std::size_t j = 0; j < legs; ++j) {
        const auto& lp = plan.leg_parts[j];
        int t = plan.split[j];
        std::vector<int> targets(lp.begin() + 1, lp.begin() + t);
        auto cand = extendable_set(inst, lp.front(), targets);
        if (!cand) return std::nullopt;
        if (cand->candidates.empty()) return CandidateSet{};
        reduced[j] = cand->candidates;
        leg_candidates[j] = std::move(*cand);
    }

    // Phase 2: root candidates across the reduced far parts and the upper
    // white fans.
    std::vector<std::pair<int, const VertexSet*>> slots;
    std::vector<int> slot_leg; // which leg owns slot 0 of that leg (-1: middle part)
    for (std::size_t j = 0; j < legs; ++j) {
        const auto& lp = plan.leg_parts[j];
        int t = plan.split[j];
        slots.emplace_back(lp.front(), &reduced[j]);
        slot_leg.push_back(static_cast<int>(j));
        for (std::size_t idx = static_cast<std::size_t>(t); idx + 1 < lp.size(); ++idx) {
            slots.emplace_back(lp[idx], &inst.parts[lp[idx]].members);
            slot_leg.push_back(-1);
        }
    }

    // Full traversal target: every part of the bi-spider exactly once.
    std::vector<int> all_labels;
    for (const auto& lp : plan.leg_parts)
        all_labels.insert(all_labels.end(), lp.begin(), lp.end() - 1);
    all_labels.push_back(d.root);

    CandidateSet out;
    for (Vertex y : inst.eligible(d.root)) {
        auto sg = build_conflict_graph(inst, y, slots);
        if (!sg) return std::nullopt;
        auto per_slot = traverse_slots(*sg, slots.size());
        if (!per_slot) continue;

        VertexSet witness{y};
        for (std::size_t s = 0; s < slots.size(); ++s) {
            Vertex v = (*per_slot)[s];
            if (slot_leg[s] >= 0) {
                const auto& leg_wit = leg_candidates[slot_leg[s]].witnesses.at(v);
                witness.insert(witness.end(), leg_wit.begin(), leg_wit.end());
            } else {
                witness.push_back(v);
            }
        }
        std::sort(witness.begin(), witness.end());
        witness.erase(std::unique(witness.begin(), witness.end()), witness.end());

        ++stats().witness_checks;
        bool ok = is_independent(g, witness) && witness.size() == all_labels.size();
        if (ok)
            for (int label : all_labels) {
                int hits = 0;
                const auto& members = inst.parts[label].members;
                for (Vertex v : witness)
                    if (std::find(members.begin(), members.end(), v) != members.end()) ++hits;
                if (hits != 1) {
                    ok = false;
                    break;
                }
            }
        if (!ok) {
            // The recombination claim failed: either the input was not
            // even-hole-free or the instance hypotheses were violated.
            ++stats().witness_failures;
            return std::nullopt;
        }
        out.candidates.push_back(y);
        out.witnesses.emplace(y, std::move(witness));
    }
    return out;
}

std::optional<VertexSet> bispider_solve(const tisehf::Instance& inst,
                                        const bitree::BiSpiderDecomp& d, const LegPlan& plan) {
    auto cand = all_root_candidates(inst, d, plan);
    if (!cand || cand->candidates.empty()) return std::nullopt;
    return cand->witnesses.at(cand->candidates.front());
}

std::optional<tisehf::Instance> apply_bicut(const tisehf::Instance& inst,
                                            const bitree::Separation& sep) {
    const Graph& g = *inst.g;
    tisehf::Instance out = inst;
    VertexSet far_side;
    for (int s : sep.Y) {
        const auto& members = inst.parts[s].members;
        far_side.insert(far_side.end(), members.begin(), members.end());
    }
    for (int j : sep.X) {
        auto& part = out.parts[j];
        VertexSet kept;
        for (Vertex v : part.members) {
            if (part.anchor && v == *part.anchor) {
                kept.push_back(v);
                continue;
            }
            bool crossing = false;
            for (Vertex u : far_side)
                if (g.adjacent(v, u)) {
                    crossing = true;
                    break;
                }
            if (!crossing) kept.push_back(v);
        }
        part.members = std::move(kept);
        if (out.eligible(j).empty()) return std::nullopt;
    }
    return out;
}

} // namespace ehf::bispider
