#include "ehf/chordal.hpp"

#include <algorithm>

namespace ehf {

bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& eo) {
    const int n = g.num_vertices();
    if (static_cast<int>(eo.order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = eo.order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    for (int i = 0; i < n; ++i) {
        Vertex v = eo.order[i];
        VertexSet later;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > i) later.push_back(w);
        if (!is_clique(g, later)) return false;
    }
    return true;
}

namespace {

// Maximum cardinality search: number vertices n-1 down to 0, always picking
// the unnumbered vertex with the most numbered neighbors (smallest id on
// ties). The resulting order, read positions 0..n-1, is a PEO iff g is
// chordal.
EliminationOrdering mcs_ordering(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> weight(n, 0);
    std::vector<bool> numbered(n, false);
    EliminationOrdering eo;
    eo.order.assign(n, 0);
    for (int slot = n - 1; slot >= 0; --slot) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] &&
                (best == -1 || weight[v] > weight[best]))
                best = v;
        numbered[best] = true;
        eo.order[slot] = best;
        for (Vertex w : g.neighbors(best))
            if (!numbered[w]) ++weight[w];
    }
    return eo;
}

} // namespace

std::optional<EliminationOrdering> perfect_elimination_ordering(const Graph& g) {
    EliminationOrdering eo = mcs_ordering(g);
    if (!is_perfect_elimination_ordering(g, eo)) return std::nullopt;
    return eo;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

VertexSet chordal_mis(const Graph& g) {
    auto eo = perfect_elimination_ordering(g);
    if (!eo) throw std::invalid_argument("chordal_mis: graph is not chordal");
    std::vector<bool> taken(g.num_vertices(), false);
    VertexSet result;
    for (Vertex v : eo->order) {
        bool blocked = false;
        for (Vertex w : g.neighbors(v))
            if (taken[w]) {
                blocked = true;
                break;
            }
        if (!blocked) {
            taken[v] = true;
            result.push_back(v);
        }
    }
    return sorted_copy(std::move(result));
}

} // namespace ehf
