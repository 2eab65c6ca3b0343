#include "ehf/gen.hpp"

#include <algorithm>
#include <set>

#include "ehf/bitree.hpp"
#include "ehf/oracle.hpp"
#include "ehf/tisehf.hpp"

namespace ehf::gen {

Graph gen_chordal(int n, double density, std::uint32_t seed) {
    if (n < 0) throw std::invalid_argument("gen_chordal: negative n");
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("gen_chordal: density not in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::set<Vertex>> nb(n);
    for (int v = 1; v < n; ++v) {
        int target = static_cast<int>(density * v + 0.5);
        VertexSet clique;
        VertexSet candidates(static_cast<std::size_t>(v));
        for (int u = 0; u < v; ++u) candidates[u] = u;
        while (static_cast<int>(clique.size()) < target && !candidates.empty()) {
            Vertex c = candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
            clique.push_back(c);
            VertexSet next;
            for (Vertex u : candidates)
                if (u != c && nb[c].count(u)) next.push_back(u);
            candidates = std::move(next);
        }
        for (Vertex u : clique) {
            edges.emplace_back(u, v);
            nb[u].insert(v);
            nb[v].insert(u);
        }
    }
    return Graph(n, edges);
}

Graph gen_ehf(int n, double p, std::uint32_t seed) {
    if (n < 0) throw std::invalid_argument("gen_ehf: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_ehf: p not in [0,1]");
    Rng rng(seed);
    std::set<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.insert({u, v});
    while (true) {
        Graph g(n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
        auto hole = oracle::find_even_hole(g);
        if (!hole) return g;
        const auto& c = hole->cycle;
        std::uint32_t pick = rng.below(static_cast<std::uint32_t>(c.size()));
        Vertex a = c[pick];
        Vertex b = c[(pick + 1) % c.size()];
        edges.erase({std::min(a, b), std::max(a, b)});
    }
}

namespace {

struct Wiring {
    std::set<std::pair<Vertex, Vertex>> forced;
    std::set<std::pair<Vertex, Vertex>> noise;

    void add_forced(Vertex a, Vertex b) { forced.insert(std::minmax(a, b)); }
    bool has(Vertex a, Vertex b) const {
        auto e = std::minmax(a, b);
        return forced.count(e) || noise.count(e);
    }
    std::vector<std::pair<Vertex, Vertex>> all() const {
        std::vector<std::pair<Vertex, Vertex>> out(forced.begin(), forced.end());
        out.insert(out.end(), noise.begin(), noise.end());
        return out;
    }
};

} // namespace

PlantedInstance gen_planted(int k, int part_size, double noise, std::uint32_t seed) {
    if (k < 1 || k > 6) throw std::invalid_argument("gen_planted: k must be in 1..6");
    if (part_size < 3 || part_size > 8)
        throw std::invalid_argument("gen_planted: part_size must be in 3..8");
    if (noise < 0.0 || noise > 1.0) throw std::invalid_argument("gen_planted: noise not in [0,1]");

    const int K = k + 1;
    auto whites = tisehf::enumerate_white_structures(k);
    // Hypothesis-style instances have the top label as a white-tree leaf.
    std::vector<std::vector<int>> leaf_whites;
    for (const auto& b : whites) {
        int deg = 0;
        for (int i = 1; i <= k; ++i)
            if (b[i] == K) ++deg;
        if (deg == 1) leaf_whites.push_back(b);
    }
    auto reds = tisehf::enumerate_red_structures(k);

    for (std::uint32_t attempt = 0; attempt < 64; ++attempt) {
        std::uint32_t attempt_seed = seed + attempt;
        Rng rng(attempt_seed);

        // Sample a structure pair whose bi-tree carries no obstruction; an
        // obstructed pair forces an even hole through the wiring itself.
        std::vector<int> b, r;
        bool found_structures = false;
        for (int tries = 0; tries < 400 && !found_structures; ++tries) {
            b = leaf_whites[rng.below(static_cast<std::uint32_t>(leaf_whites.size()))];
            r = reds[rng.below(static_cast<std::uint32_t>(reds.size()))];
            std::vector<std::pair<int, int>> white_edges, red_arcs;
            for (int i = 1; i <= k; ++i) {
                white_edges.emplace_back(i, b[i]);
                red_arcs.emplace_back(i, r[i]);
            }
            auto t = bitree::make_bitree(K, white_edges, red_arcs, K);
            if (!bitree::find_directed_obstruction(t) && !bitree::find_alternating_obstruction(t))
                found_structures = true;
        }
        if (!found_structures) continue;

        const int n = K * part_size;
        auto base = [&](int label) { return (label - 1) * part_size; };
        std::vector<Vertex> y(K + 1), x(k + 1),
            w(k + 1);
        for (int i = 1; i <= K; ++i) y[i] = base(i);
        for (int i = 1; i <= k; ++i) {
            x[i] = base(i) + 1;
            w[i] = base(i) + 2;
        }
        std::vector<bool> is_connector(n, false);
        for (int i = 1; i <= k; ++i) {
            is_connector[x[i]] = true;
            is_connector[w[i]] = true;
        }

        Wiring wires;
        for (int i = 1; i <= K; ++i)
            for (int a = 0; a < part_size; ++a)
                for (int c = a + 1; c < part_size; ++c)
                    wires.add_forced(base(i) + a, base(i) + c);
        for (int i = 1; i <= k; ++i) {
            int bi = b[i];
            for (int a = 0; a < part_size; ++a) {
                Vertex v = base(bi) + a;
                if (bi <= k && v == w[bi]) continue;
                wires.add_forced(w[i], v);
            }
            int ri = r[i];
            for (int a = 0; a < part_size; ++a) {
                Vertex v = base(ri) + a;
                if (ri <= k && (v == x[ri] || v == w[ri])) continue;
                wires.add_forced(x[i], v);
            }
        }

        // Noise only between white-adjacent parts, never on connectors and
        // never joining two planted witnesses.
        for (int i = 1; i <= k; ++i) {
            int bi = b[i];
            int lo = std::min(i, bi), hi = std::max(i, bi);
            for (int a = 0; a < part_size; ++a)
                for (int c = 0; c < part_size; ++c) {
                    Vertex u = base(lo) + a, v = base(hi) + c;
                    if (is_connector[u] || is_connector[v]) continue;
                    if (u == y[lo] && v == y[hi]) continue;
                    if (wires.has(u, v)) continue;
                    if (rng.chance(noise)) wires.noise.insert(std::minmax(u, v));
                }
        }

        // Repair: even holes may only be broken on noise edges.
        bool viable = true;
        for (int repair = 0;; ++repair) {
            if (repair > 500) {
                viable = false;
                break;
            }
            Graph g(n, wires.all());
            auto hole = oracle::find_even_hole(g);
            if (!hole) break;
            std::vector<std::pair<Vertex, Vertex>> deletable;
            const auto& cyc = hole->cycle;
            for (std::size_t idx = 0; idx < cyc.size(); ++idx) {
                auto e = std::minmax(cyc[idx], cyc[(idx + 1) % cyc.size()]);
                if (wires.noise.count({e.first, e.second})) deletable.push_back({e.first, e.second});
            }
            if (deletable.empty()) {
                viable = false;
                break;
            }
            wires.noise.erase(deletable[rng.below(static_cast<std::uint32_t>(deletable.size()))]);
        }
        if (!viable) continue;

        PlantedInstance out;
        out.graph = Graph(n, wires.all());
        for (int i = 1; i <= K; ++i) {
            VertexSet part;
            for (int a = 0; a < part_size; ++a) part.push_back(base(i) + a);
            out.parts.push_back(std::move(part));
        }
        out.planted_y = y;
        out.planted_x = x;
        out.planted_w = w;
        out.white_structure = b;
        out.red_structure = r;
        out.seed_used = attempt_seed;
        for (int i = 1; i <= K; ++i) out.planted.push_back(y[i]);
        out.planted = sorted_copy(std::move(out.planted));

        if (!is_independent(out.graph, out.planted))
            throw invariant_violation("gen_planted: planted transversal not independent");
        check_clique_partition(out.graph, out.parts);
        if (oracle::find_even_hole(out.graph))
            throw invariant_violation("gen_planted: graph still has an even hole");
        return out;
    }
    throw std::runtime_error("gen_planted: exhausted attempts without a viable instance");
}

} // namespace ehf::gen
