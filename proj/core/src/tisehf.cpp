#include "ehf/tisehf.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "ehf/bispider.hpp"
#include "ehf/parallel.hpp"

namespace ehf::tisehf {

Stats& stats() {
    static Stats s;
    return s;
}

void reset_stats() {
    stats().bitree_loop_runs = 0;
    stats().bitree_loop_iterations = 0;
    stats().loop_bound_violations = 0;
    stats().white_branches = 0;
    stats().red_branches = 0;
}

VertexSet Instance::eligible(int label) const {
    const Part& p = parts[label];
    VertexSet out;
    for (Vertex v : p.members)
        if (!p.anchor || v != *p.anchor) out.push_back(v);
    return out;
}

Instance make_instance(const Graph& g, const CliquePartition& parts) {
    Instance inst;
    inst.g = &g;
    inst.parts.resize(parts.size() + 1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        inst.parts[i + 1].members = sorted_copy(parts[i]);
    return inst;
}

std::string check_hypotheses(const Instance& inst) {
    const Graph& g = *inst.g;
    const int K = inst.label_count();
    if (K < 1) return "no parts";

    std::vector<int> owner(g.num_vertices(), 0);
    for (int i = 1; i <= K; ++i) {
        const Part& p = inst.parts[i];
        if (p.members.empty()) return "part " + std::to_string(i) + " is empty";
        for (Vertex v : p.members) {
            g.check_vertex(v);
            if (owner[v]) return "vertex in two parts";
            owner[v] = i;
        }
        if (!is_clique(g, p.members)) return "part " + std::to_string(i) + " is not a clique";
    }

    // Externals: complete to exactly their two parts, in no part themselves,
    // and forming a white tree with the top label a leaf.
    if (!inst.externals.empty()) {
        if (static_cast<int>(inst.externals.size()) != K - 1) return "external count mismatch";
        std::vector<int> deg(K + 1, 0);
        std::set<std::pair<int, int>> edges;
        for (const auto& ext : inst.externals) {
            if (ext.a < 1 || ext.a > K || ext.b < 1 || ext.b > K || ext.a == ext.b)
                return "external with bad part labels";
            if (owner[ext.w]) return "external vertex still inside a part";
            if (!edges.insert(std::minmax(ext.a, ext.b)).second) return "duplicate white edge";
            ++deg[ext.a];
            ++deg[ext.b];
            for (int j = 1; j <= K; ++j) {
                bool joined = (j == ext.a || j == ext.b);
                for (Vertex v : inst.parts[j].members)
                    if (g.adjacent(ext.w, v) != joined)
                        return joined ? "external not complete to its part"
                                      : "external adjacent to a foreign part";
            }
        }
        // K-1 distinct edges + connectivity via degree check is not enough;
        // do a DSU pass.
        std::vector<int> dsu(K + 1);
        for (int i = 0; i <= K; ++i) dsu[i] = i;
        auto find = [&](int x) {
            while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
            return x;
        };
        for (auto [a, b] : edges) {
            int ra = find(a), rb = find(b);
            if (ra == rb) return "white edges contain a cycle";
            dsu[ra] = rb;
        }
        if (deg[K] != 1) return "top label is not a white-tree leaf";
    }

    // Anchors: present on every non-top label or on none.
    int anchored = 0;
    for (int i = 1; i < K; ++i)
        if (inst.parts[i].anchor) ++anchored;
    if (inst.parts[K].anchor) return "top part must not carry an anchor";
    if (anchored != 0) {
        if (anchored != K - 1) return "anchors present on only some parts";
        VertexSet xs;
        for (int i = 1; i < K; ++i) {
            const Part& p = inst.parts[i];
            Vertex x = *p.anchor;
            int r = p.anchor_target;
            if (r < 1 || r > K || r == i) return "anchor target out of range";
            if (owner[x] != i) return "anchor not inside its part";
            xs.push_back(x);
            for (int j = 1; j <= K; ++j) {
                if (j == i) continue;
                const Part& q = inst.parts[j];
                for (Vertex v : q.members) {
                    if (q.anchor && v == *q.anchor && j == r) continue; // target's own anchor exempt
                    if (g.adjacent(x, v) != (j == r))
                        return j == r ? "anchor not complete to its target part"
                                      : "anchor adjacent to a foreign part";
                }
            }
        }
        if (!is_independent(g, xs)) return "anchors are not independent";
        for (int v = 1; v < K; ++v) {
            int steps = 0, x = v;
            while (x != K) {
                x = inst.parts[x].anchor_target;
                if (x < 1 || x > K || ++steps > K) return "red arcs do not reach the top label";
            }
        }
    }
    return {};
}

bitree::BiTree build_bitree(const Instance& inst) {
    const int K = inst.label_count();
    std::vector<std::pair<int, int>> white;
    for (const auto& ext : inst.externals) white.emplace_back(ext.a, ext.b);
    std::vector<std::pair<int, int>> red;
    for (int i = 1; i < K; ++i) {
        const Part& p = inst.parts[i];
        if (!p.anchor) throw invariant_violation("build_bitree: part without anchor");
        red.emplace_back(i, p.anchor_target);
    }
    auto t = bitree::make_bitree(K, std::move(white), red, K);
    if (auto err = bitree::validate(t); !err.empty())
        throw invariant_violation("build_bitree: " + err);
    return t;
}

std::vector<std::vector<int>> enumerate_white_structures(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_white_structures: k must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> b(k + 1, 1);
    while (true) {
        bool self = false;
        for (int i = 1; i <= k; ++i)
            if (b[i] == i) self = true;
        if (!self) {
            // k edges on k+1 vertices form a spanning tree iff acyclic.
            std::vector<int> dsu(k + 2);
            for (int i = 0; i <= k + 1; ++i) dsu[i] = i;
            auto find = [&](int x) {
                while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
                return x;
            };
            bool tree = true;
            for (int i = 1; i <= k && tree; ++i) {
                int ra = find(i), rb = find(b[i]);
                if (ra == rb) tree = false;
                else dsu[ra] = rb;
            }
            if (tree) out.push_back(b);
        }
        int i = k;
        while (i >= 1 && b[i] == k + 1) {
            b[i] = 1;
            --i;
        }
        if (i < 1) break;
        ++b[i];
    }
    return out;
}

std::vector<std::vector<int>> enumerate_red_structures(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_red_structures: k must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> r(k + 1, 1);
    while (true) {
        bool ok = true;
        for (int i = 1; i <= k && ok; ++i)
            if (r[i] == i) ok = false;
        if (ok) {
            for (int v = 1; v <= k && ok; ++v) {
                int steps = 0, x = v;
                while (x != k + 1) {
                    x = r[x];
                    if (++steps > k) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) out.push_back(r);
        }
        int i = k;
        while (i >= 1 && r[i] == k + 1) {
            r[i] = 1;
            --i;
        }
        if (i < 1) break;
        ++r[i];
    }
    return out;
}

std::optional<Instance> clean_white(const Instance& pre, const std::vector<int>& b,
                                    const std::vector<Vertex>& w) {
    const Graph& g = *pre.g;
    const int K = pre.label_count();
    const int k = K - 1;
    Instance out = pre;
    out.externals.clear();

    for (int i = 1; i <= k; ++i) {
        auto& members = out.parts[i].members;
        auto it = std::find(members.begin(), members.end(), w[i]);
        if (it == members.end())
            throw std::invalid_argument("clean_white: w vertex not inside its part");
        members.erase(it);
    }
    for (int i = 1; i <= k; ++i) {
        Vertex wi = w[i];
        for (int j = 1; j <= K; ++j) {
            if (j == i) continue;
            auto& members = out.parts[j].members;
            VertexSet kept;
            for (Vertex v : members)
                if (g.adjacent(v, wi) == (j == b[i])) kept.push_back(v);
            members = std::move(kept);
        }
        out.externals.push_back(External{wi, i, b[i]});
    }
    for (int j = 1; j <= K; ++j)
        if (out.parts[j].members.empty()) return std::nullopt;

    // Rename so the top label is a white-tree leaf (lowest-index leaf swaps in).
    std::vector<int> deg(K + 1, 0);
    for (const auto& ext : out.externals) {
        ++deg[ext.a];
        ++deg[ext.b];
    }
    if (deg[K] != 1) {
        int leaf = 0;
        for (int i = 1; i < K; ++i)
            if (deg[i] == 1) {
                leaf = i;
                break;
            }
        std::swap(out.parts[leaf], out.parts[K]);
        for (auto& ext : out.externals) {
            if (ext.a == leaf) ext.a = K;
            else if (ext.a == K) ext.a = leaf;
            if (ext.b == leaf) ext.b = K;
            else if (ext.b == K) ext.b = leaf;
        }
    }
    if (auto err = check_hypotheses(out); !err.empty())
        throw invariant_violation("clean_white: " + err);
    return out;
}

std::optional<Instance> clean_red(const Instance& inst, const std::vector<int>& r,
                                  const std::vector<Vertex>& x) {
    const Graph& g = *inst.g;
    const int K = inst.label_count();
    const int k = K - 1;
    Instance out = inst;

    for (int i = 1; i <= k; ++i) {
        auto& part = out.parts[i];
        if (std::find(part.members.begin(), part.members.end(), x[i]) == part.members.end())
            throw std::invalid_argument("clean_red: x vertex not inside its part");
        part.anchor = x[i];
        part.anchor_target = r[i];
    }
    for (int i = 1; i <= k; ++i) {
        Vertex xi = x[i];
        for (int j = 1; j <= K; ++j) {
            if (j == i) continue;
            auto& part = out.parts[j];
            VertexSet kept;
            for (Vertex v : part.members) {
                if (part.anchor && v == *part.anchor) {
                    kept.push_back(v); // the target part's own anchor is never deleted
                    continue;
                }
                if (g.adjacent(v, xi) == (j == r[i])) kept.push_back(v);
            }
            part.members = std::move(kept);
        }
    }
    for (int j = 1; j <= K; ++j) {
        if (out.parts[j].members.empty()) return std::nullopt;
        if (out.eligible(j).empty()) return std::nullopt;
    }
    if (auto err = check_hypotheses(out); !err.empty())
        throw invariant_violation("clean_red: " + err);
    return out;
}

namespace {

void assert_transversal(const Graph& g, const CliquePartition& parts, const VertexSet& result) {
    if (result.size() != parts.size())
        throw invariant_violation("transversal has wrong size");
    if (!is_independent(g, result)) throw invariant_violation("transversal is not independent");
    for (const auto& part : parts) {
        int hits = 0;
        for (Vertex v : result)
            if (std::find(part.begin(), part.end(), v) != part.end()) ++hits;
        if (hits != 1) throw invariant_violation("transversal does not hit a part exactly once");
    }
}

std::optional<VertexSet> solve_rec(const Graph& g, const CliquePartition& parts,
                                   const Options& opts);

std::optional<VertexSet> member_guess(const Graph& g, const CliquePartition& parts,
                                      std::size_t part_index, Vertex v, const Options& opts) {
    CliquePartition rest;
    for (std::size_t q = 0; q < parts.size(); ++q) {
        if (q == part_index) continue;
        VertexSet kept;
        for (Vertex u : parts[q])
            if (!g.adjacent(u, v)) kept.push_back(u);
        if (kept.empty()) return std::nullopt;
        rest.push_back(std::move(kept));
    }
    auto sub = solve_rec(g, rest, opts);
    if (!sub) return std::nullopt;
    sub->push_back(v);
    return sorted_copy(std::move(*sub));
}

// Extract the per-part representative of a transversal, 1-based.
std::vector<Vertex> split_by_part(const CliquePartition& parts, const VertexSet& transversal) {
    std::vector<Vertex> by_part(parts.size() + 1, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : transversal)
            if (std::find(parts[i].begin(), parts[i].end(), v) != parts[i].end())
                by_part[i + 1] = v;
    return by_part;
}

CliquePartition labels_to_partition(const Instance& inst, int upto) {
    CliquePartition out;
    for (int i = 1; i <= upto; ++i) out.push_back(inst.parts[i].members);
    return out;
}

std::optional<VertexSet> solve_branch(const Graph& g, const CliquePartition& parts,
                                      const std::vector<int>& b, const std::vector<Vertex>& wvec,
                                      const Options& opts) {
    const int k = static_cast<int>(parts.size()) - 1;
    Instance pre = make_instance(g, parts);
    auto cleaned = clean_white(pre, b, wvec);
    if (!cleaned) return std::nullopt;

    // Second independent set X on the cleaned non-top parts; its absence
    // kills the branch.
    CliquePartition first_k = labels_to_partition(*cleaned, k);
    auto X = solve_rec(g, first_k, opts);
    if (!X) return std::nullopt;
    std::vector<Vertex> xvec = split_by_part(first_k, *X);

    CliquePartition all_cleaned = labels_to_partition(*cleaned, k + 1);
    for (int i = 1; i <= k; ++i) {
        auto hit = member_guess(g, all_cleaned, i - 1, xvec[i], opts);
        if (hit) return hit;
    }

    for (const auto& r : enumerate_red_structures(k)) {
        ++stats().red_branches;
        // The target part must keep a non-anchor neighbor of each anchor.
        bool feasible = true;
        for (int i = 1; i <= k && feasible; ++i) {
            Vertex xi = xvec[i];
            const auto& target = cleaned->parts[r[i]].members;
            Vertex tanchor = r[i] <= k ? xvec[r[i]] : -1;
            bool has = false;
            for (Vertex v : target)
                if (v != tanchor && g.adjacent(v, xi)) {
                    has = true;
                    break;
                }
            feasible = has;
        }
        if (!feasible) continue;
        auto inst = clean_red(*cleaned, r, xvec);
        if (!inst) continue;
        auto res = solve_bitree_instance(*inst, opts);
        if (res) return res;
    }
    return std::nullopt;
}

std::optional<VertexSet> solve_rec(const Graph& g, const CliquePartition& parts,
                                   const Options& opts) {
    for (const auto& part : parts)
        if (part.empty()) return std::nullopt;
    const std::size_t j = parts.size();
    if (j == 0) return VertexSet{};
    if (j == 1) return VertexSet{*std::min_element(parts[0].begin(), parts[0].end())};

    // Mutually complete part pair: no transversal can exist.
    for (std::size_t a = 0; a < j; ++a)
        for (std::size_t c = a + 1; c < j; ++c) {
            bool ok = false;
            for (Vertex u : parts[a]) {
                for (Vertex v : parts[c])
                    if (!g.adjacent(u, v)) {
                        ok = true;
                        break;
                    }
                if (ok) break;
            }
            if (!ok) return std::nullopt;
        }

    const int k = static_cast<int>(j) - 1;
    CliquePartition first_k(parts.begin(), parts.end() - 1);
    auto W = solve_rec(g, first_k, opts);
    if (!W) return std::nullopt;
    std::vector<Vertex> wvec = split_by_part(first_k, *W);

    for (int i = 1; i <= k; ++i) {
        auto hit = member_guess(g, parts, i - 1, wvec[i], opts);
        if (hit) {
            assert_transversal(g, parts, *hit);
            return hit;
        }
    }

    auto whites = enumerate_white_structures(k);
    if (opts.trace)
        *opts.trace << "[tisehf] parts=" << j << " white structures=" << whites.size() << "\n";
    auto eval = [&](std::size_t bi) -> std::optional<VertexSet> {
        const auto& b = whites[bi];
        ++stats().white_branches;
        // The partner part must contain a neighbor of w_i or cleaning empties it.
        for (int i = 1; i <= k; ++i) {
            Vertex wi = wvec[i];
            bool has = false;
            for (Vertex v : parts[b[i] - 1])
                if (v != wi && g.adjacent(v, wi)) {
                    has = true;
                    break;
                }
            if (!has) return std::nullopt;
        }
        Options seq{1, opts.threads > 1 ? nullptr : opts.trace};
        return solve_branch(g, parts, b, wvec, seq);
    };
    auto res = first_hit<VertexSet>(whites.size(), opts.threads, eval);
    if (res) assert_transversal(g, parts, *res);
    return res;
}

} // namespace

std::optional<VertexSet> tisehf_solve(const Graph& g, const CliquePartition& parts,
                                      const Options& opts) {
    for (const auto& part : parts) {
        check_vertex_set(g, part);
        if (part.empty()) return std::nullopt;
        if (!is_clique(g, part)) throw std::invalid_argument("tisehf_solve: part is not a clique");
    }
    std::vector<bool> seen(g.num_vertices(), false);
    for (const auto& part : parts)
        for (Vertex v : part) {
            if (seen[v])
                throw std::invalid_argument("tisehf_solve: parts are not disjoint");
            seen[v] = true;
        }
    auto res = solve_rec(g, parts, opts);
    if (res) assert_transversal(g, parts, *res);
    return res;
}

std::optional<VertexSet> solve_assuming_member(const Graph& g, const CliquePartition& parts,
                                               std::size_t part_index, Vertex v,
                                               const Options& opts) {
    if (part_index >= parts.size())
        throw std::invalid_argument("solve_assuming_member: part index out of range");
    if (std::find(parts[part_index].begin(), parts[part_index].end(), v) ==
        parts[part_index].end())
        throw std::invalid_argument("solve_assuming_member: vertex not in its part");
    auto res = member_guess(g, parts, part_index, v, opts);
    if (res) assert_transversal(g, parts, *res);
    return res;
}

std::optional<VertexSet> compute_disjoint_solution(const Graph& g, const CliquePartition& parts,
                                                   const Options& opts) {
    if (parts.empty()) throw std::invalid_argument("compute_disjoint_solution: no parts");
    CliquePartition first_k(parts.begin(), parts.end() - 1);
    auto res = solve_rec(g, first_k, opts);
    if (res) assert_transversal(g, first_k, *res);
    return res;
}

std::optional<VertexSet> solve_bitree_instance(const Instance& inst, const Options& opts) {
    const Graph& g = *inst.g;
    const int K = inst.label_count();
    const int k = K - 1;
    ++stats().bitree_loop_runs;

    CliquePartition original_parts = [&] {
        CliquePartition out;
        for (int i = 1; i <= K; ++i) out.push_back(inst.parts[i].members);
        return out;
    }();

    Instance live = inst;
    std::map<Vertex, VertexSet> table;
    int iterations = 0;

    while (true) {
        ++iterations;
        ++stats().bitree_loop_iterations;
        if (iterations > std::max(k, 1)) {
            ++stats().loop_bound_violations;
            throw invariant_violation("solve_bitree_instance: exceeded the iteration bound");
        }
        bitree::BiTree t = build_bitree(live);
        if (opts.trace)
            *opts.trace << "[bitree-loop] iteration " << iterations << ", " << live.label_count()
                        << " parts\n";
        if (bitree::find_directed_obstruction(t) || bitree::find_alternating_obstruction(t))
            return std::nullopt;

        if (auto decomp = bitree::as_bispider(t)) {
            auto plan = bispider::plan_from_decomp(*decomp);
            auto cand = bispider::all_root_candidates(live, *decomp, plan);
            if (!cand || cand->candidates.empty()) return std::nullopt;
            Vertex pick = cand->candidates.front();
            VertexSet result = cand->witnesses.at(pick);

            // Expand the witness table transitively.
            std::set<Vertex> seen(result.begin(), result.end());
            std::vector<Vertex> queue(result.begin(), result.end());
            while (!queue.empty()) {
                Vertex v = queue.back();
                queue.pop_back();
                auto it = table.find(v);
                if (it == table.end()) continue;
                for (Vertex u : it->second)
                    if (seen.insert(u).second) {
                        result.push_back(u);
                        queue.push_back(u);
                    }
            }
            result = sorted_copy(std::move(result));
            assert_transversal(g, original_parts, result);
            return result;
        }

        auto bs = bitree::find_bispider_separation(t);
        if (!bs) throw invariant_violation("solve_bitree_instance: no bi-spider separation found");

        auto cut = bispider::apply_bicut(live, bs->sep);
        if (!cut) return std::nullopt;

        // Sub-instance over the isolated bi-spider's labels; its root part
        // keeps its anchor vertex but the anchor's target lies outside.
        Instance sub;
        sub.g = live.g;
        sub.parts.resize(bs->spider.m + 1);
        std::vector<int> to_sub(K + 1, 0);
        for (int l = 1; l <= bs->spider.m; ++l) {
            sub.parts[l] = cut->parts[bs->spider_orig[l]];
            to_sub[bs->spider_orig[l]] = l;
        }
        int sub_root = to_sub[bs->sep.v];
        sub.parts[sub_root].anchor_target = 0;
        for (int l = 1; l <= bs->spider.m; ++l) {
            if (l == sub_root) continue;
            int& tgt = sub.parts[l].anchor_target;
            tgt = to_sub[tgt];
        }
        for (const auto& ext : cut->externals)
            if (to_sub[ext.a] && to_sub[ext.b])
                sub.externals.push_back(External{ext.w, to_sub[ext.a], to_sub[ext.b]});

        auto plan = bispider::plan_from_decomp(bs->decomp);
        auto cand = bispider::all_root_candidates(sub, bs->decomp, plan);
        if (!cand || cand->candidates.empty()) return std::nullopt;
        for (const auto& [y, wit] : cand->witnesses) table[y] = wit;

        // Keep the root side plus the separation part, whose content shrinks
        // to the surviving root candidates (anchor retained).
        std::vector<int> keep = bs->sep.Y;
        keep.push_back(bs->sep.v);
        std::sort(keep.begin(), keep.end());
        std::vector<int> to_new(K + 1, 0);
        Instance next;
        next.g = live.g;
        next.parts.resize(keep.size() + 1);
        for (std::size_t idx = 0; idx < keep.size(); ++idx) to_new[keep[idx]] = static_cast<int>(idx) + 1;
        for (std::size_t idx = 0; idx < keep.size(); ++idx) {
            int old = keep[idx];
            Part p = cut->parts[old];
            if (old == bs->sep.v) {
                VertexSet members = cand->candidates;
                if (p.anchor) members.push_back(*p.anchor);
                p.members = sorted_copy(std::move(members));
            }
            if (p.anchor) p.anchor_target = to_new[p.anchor_target];
            next.parts[idx + 1] = std::move(p);
        }
        for (const auto& ext : cut->externals)
            if (to_new[ext.a] && to_new[ext.b])
                next.externals.push_back(External{ext.w, to_new[ext.a], to_new[ext.b]});
        // Witnesses for the dropped parts are recovered through the table
        // once the shrunken instance resolves.
        live = std::move(next);
    }
}

} // namespace ehf::tisehf
