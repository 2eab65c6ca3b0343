#include "ehf/oracle.hpp"

#include <algorithm>
#include <bit>

namespace ehf::oracle {

std::string validate(const Graph& g, const EvenHoleCertificate& cert) {
    const auto& c = cert.cycle;
    if (c.size() < 4) return "cycle shorter than four vertices";
    if (c.size() % 2 != 0) return "cycle has odd length";
    check_vertex_set(g, c); // throws on duplicates / range
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (consecutive != g.adjacent(c[i], c[j]))
                return consecutive ? "missing cycle edge" : "cycle has a chord";
        }
    return {};
}

namespace {

struct MisSearch {
    const std::vector<std::uint64_t>& nb;
    std::uint64_t best = 0;
    int best_size = 0;

    void run(std::uint64_t alive, std::uint64_t current, int size) {
        if (size + std::popcount(alive) <= best_size) return;
        if (alive == 0) {
            best = current;
            best_size = size;
            return;
        }
        int pick = -1, pick_deg = -1;
        for (std::uint64_t rest = alive; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int deg = std::popcount(nb[v] & alive);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pick;
        run(alive & ~(nb[pick] | bit), current | bit, size + 1);
        run(alive & ~bit, current, size);
    }
};

} // namespace

VertexSet brute_mis(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return {};
    if (n > 64) throw std::invalid_argument("brute_mis: graph too large for exhaustive search");
    std::vector<std::uint64_t> nb(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nb[v] |= std::uint64_t{1} << w;

    // Greedy min-degree seed for the lower bound.
    std::uint64_t greedy = 0;
    int greedy_size = 0;
    std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (alive) {
        int pick = -1, pick_deg = n + 1;
        for (std::uint64_t rest = alive; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int deg = std::popcount(nb[v] & alive);
            if (deg < pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pick;
        greedy |= bit;
        ++greedy_size;
        alive &= ~(nb[pick] | bit);
    }

    MisSearch search{nb, greedy, greedy_size};
    search.run(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0, 0);

    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (search.best >> v & 1) out.push_back(v);
    return out;
}

namespace {

// DFS over chordless paths anchored at their minimum vertex. Every vertex
// added is non-adjacent to all earlier path vertices except its predecessor
// (and the anchor, exactly when it closes a cycle).
struct HoleSearch {
    const Graph& g;
    std::vector<Vertex> path;
    std::vector<bool> on_path;
    std::optional<EvenHoleCertificate> found;

    explicit HoleSearch(const Graph& gr) : g(gr), on_path(static_cast<std::size_t>(gr.num_vertices()), false) {}

    bool extend() {
        Vertex a = path.front();
        Vertex last = path.back();
        for (Vertex u : g.neighbors(last)) {
            if (u <= a || on_path[u]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(u, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (g.adjacent(u, a)) {
                if (path.size() >= 3 && (path.size() + 1) % 2 == 0) {
                    VertexSet cycle = path;
                    cycle.push_back(u);
                    found = EvenHoleCertificate{std::move(cycle)};
                    return true;
                }
                continue; // closing vertex cannot extend a chordless path
            }
            path.push_back(u);
            on_path[u] = true;
            if (extend()) return true;
            on_path[u] = false;
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<EvenHoleCertificate> find_even_hole(const Graph& g) {
    HoleSearch search(g);
    for (Vertex a = 0; a < g.num_vertices(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            search.path = {a, b};
            std::fill(search.on_path.begin(), search.on_path.end(), false);
            search.on_path[a] = true;
            search.on_path[b] = true;
            if (search.extend()) {
                if (auto err = validate(g, *search.found); !err.empty())
                    throw invariant_violation("find_even_hole produced a bad certificate: " + err);
                return search.found;
            }
        }
    }
    return std::nullopt;
}

namespace {

bool transversal_rec(const Graph& g, const CliquePartition& parts, std::size_t idx,
                     VertexSet& chosen) {
    if (idx == parts.size()) return true;
    for (Vertex v : parts[idx]) {
        bool ok = true;
        for (Vertex c : chosen)
            if (g.adjacent(v, c)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(v);
        if (transversal_rec(g, parts, idx + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<VertexSet> brute_transversal(const Graph& g, const CliquePartition& parts) {
    for (const auto& p : parts) {
        check_vertex_set(g, p);
        if (p.empty()) return std::nullopt;
    }
    VertexSet chosen;
    if (!transversal_rec(g, parts, 0, chosen)) return std::nullopt;
    return sorted_copy(std::move(chosen));
}

namespace {

// Labels 1..m. Sequence entries in 1..m; m >= 2.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int m) {
    std::vector<int> degree(m + 1, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(m + 1, false);
    for (int s : seq) {
        int leaf = 0;
        for (int v = 1; v <= m; ++v)
            if (!used[v] && degree[v] == 1) {
                leaf = v;
                break;
            }
        edges.emplace_back(leaf, s);
        used[leaf] = true;
        --degree[s];
    }
    std::vector<int> last;
    for (int v = 1; v <= m; ++v)
        if (!used[v] && degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return edges;
}

// Orient a tree's edges toward root, yielding (child, parent) arcs.
std::vector<std::pair<int, int>> orient_to_root(const std::vector<std::pair<int, int>>& edges,
                                                int m, int root) {
    std::vector<std::vector<int>> adj(m + 1);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(m + 1, 0);
    std::vector<bool> seen(m + 1, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : adj[x])
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = x;
                stack.push_back(w);
            }
    }
    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v <= m; ++v)
        if (v != root) arcs.emplace_back(v, parent[v]);
    return arcs;
}

template <typename F>
void for_each_sequence(int length, int m, F&& body) {
    std::vector<int> seq(length, 1);
    if (length == 0) {
        body(seq);
        return;
    }
    while (true) {
        body(seq);
        int i = length - 1;
        while (i >= 0 && seq[i] == m) {
            seq[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
}

} // namespace

void enumerate_bitrees(int m, const std::function<void(const bitree::BiTree&)>& emit) {
    if (m < 1) throw std::invalid_argument("enumerate_bitrees: m must be positive");
    if (m == 1) {
        emit(bitree::make_bitree(1, {}, {}, 1));
        return;
    }
    for_each_sequence(m - 2, m, [&](const std::vector<int>& white_seq) {
        auto white = prufer_decode(white_seq, m);
        for_each_sequence(m - 2, m, [&](const std::vector<int>& red_seq) {
            auto red_tree = prufer_decode(red_seq, m);
            for (int root = 1; root <= m; ++root) {
                auto arcs = orient_to_root(red_tree, m, root);
                emit(bitree::make_bitree(m, white, arcs, root));
            }
        });
    });
}

std::uint64_t bitree_count(int m) {
    std::uint64_t trees = 1, arbs = 1;
    for (int i = 0; i < m - 2; ++i) trees *= static_cast<std::uint64_t>(m);
    for (int i = 0; i < m - 1; ++i) arbs *= static_cast<std::uint64_t>(m);
    return m == 1 ? 1 : trees * arbs;
}

} // namespace ehf::oracle
