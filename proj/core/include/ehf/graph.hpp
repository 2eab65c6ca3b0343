#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ehf {

using Vertex = int;

/// Plain vertex id list; ops that require set semantics reject duplicates.
using VertexSet = std::vector<Vertex>;

/// Sequence of disjoint cliques over (a subset of) a graph's vertices.
using CliquePartition = std::vector<VertexSet>;

/// Thrown when an unconditional soundness check fails. Seeing this means
/// either a solver bug or an input that violates a documented precondition
/// in a way the solver could not detect earlier.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Immutable simple undirected graph. Adjacency is kept both as a dense
/// bit matrix (O(1) tests) and as sorted neighbor lists (iteration).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    void check_vertex(Vertex v) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<VertexSet> adj_;
};

/// Throws std::invalid_argument on out-of-range ids or duplicates.
void check_vertex_set(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    /// orig[i] = id in the host graph of the subgraph's vertex i.
    std::vector<Vertex> orig;
};

/// G[s], with vertices renumbered 0..|s|-1 in ascending host-id order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

/// True iff g[s] is acyclic.
bool induces_forest(const Graph& g, const VertexSet& s);

/// Maximal connected blocks; each block sorted, blocks ordered by minimum.
std::vector<VertexSet> connected_components(const Graph& g);

/// True iff parts are disjoint nonempty cliques of g.
void check_clique_partition(const Graph& g, const CliquePartition& parts);

VertexSet sorted_copy(VertexSet s);

} // namespace ehf
