#include "ehf/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ehf {

Graph::Graph(int n) : n_(n), stride_((static_cast<std::size_t>(n) + 63) / 64) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    bits_.assign(n * stride_, 0);
    adj_.assign(n, {});
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(u));
        if (adjacent(u, v)) continue;
        bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] |=
            std::uint64_t{1} << (v & 63);
        bits_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(u >> 6)] |=
            std::uint64_t{1} << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
    std::vector<bool> seen(g.num_vertices(), false);
    for (Vertex v : s) {
        g.check_vertex(v);
        if (seen[v])
            throw std::invalid_argument("duplicate vertex " + std::to_string(v) + " in set");
        seen[v] = true;
    }
}

VertexSet sorted_copy(VertexSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    VertexSet orig = sorted_copy(s);
    std::vector<int> sub_id(g.num_vertices(), -1);
    for (std::size_t i = 0; i < orig.size(); ++i) sub_id[orig[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < orig.size(); ++i)
        for (Vertex w : g.neighbors(orig[i])) {
            int j = sub_id[w];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    return {Graph(static_cast<int>(orig.size()), edges), std::move(orig)};
}

bool is_independent(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool induces_forest(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    // DFS cycle detection on g[s].
    std::vector<int> sub_id(g.num_vertices(), -1);
    VertexSet vs = sorted_copy(s);
    for (std::size_t i = 0; i < vs.size(); ++i) sub_id[vs[i]] = static_cast<int>(i);
    std::vector<int> state(vs.size(), 0);
    std::vector<std::pair<int, int>> stack; // (sub vertex, parent sub vertex)
    for (std::size_t r = 0; r < vs.size(); ++r) {
        if (state[r]) continue;
        stack.emplace_back(static_cast<int>(r), -1);
        state[r] = 1;
        while (!stack.empty()) {
            auto [x, parent] = stack.back();
            stack.pop_back();
            bool parent_seen = false;
            for (Vertex w : g.neighbors(vs[x])) {
                int y = sub_id[w];
                if (y < 0) continue;
                if (y == parent && !parent_seen) {
                    parent_seen = true; // one tree edge back; a second means a multi... cannot happen in simple graphs
                    continue;
                }
                if (state[y]) return false;
                state[y] = 1;
                stack.emplace_back(y, x);
            }
        }
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<VertexSet> blocks;
    for (Vertex r = 0; r < g.num_vertices(); ++r) {
        if (seen[r]) continue;
        VertexSet block;
        VertexSet stack{r};
        seen[r] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            block.push_back(x);
            for (Vertex w : g.neighbors(x))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

void check_clique_partition(const Graph& g, const CliquePartition& parts) {
    std::vector<bool> used(g.num_vertices(), false);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty())
            throw std::invalid_argument("clique partition: part " + std::to_string(p) + " is empty");
        for (Vertex v : parts[p]) {
            g.check_vertex(v);
            if (used[v])
                throw std::invalid_argument("clique partition: vertex " + std::to_string(v) +
                                            " appears in two parts");
            used[v] = true;
        }
        if (!is_clique(g, parts[p]))
            throw std::invalid_argument("clique partition: part " + std::to_string(p) +
                                        " is not a clique");
    }
}

} // namespace ehf
