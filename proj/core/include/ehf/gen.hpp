#pragma once

#include <cstdint>
#include <random>

#include "ehf/graph.hpp"

namespace ehf::gen {

/// Deterministic helpers over std::mt19937 (the engine is fully specified,
/// so outputs are stable across platforms).
class Rng {
public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}
    std::uint32_t below(std::uint32_t n) { return engine_() % n; }
    double unit() { return static_cast<double>(engine_()) / 4294967296.0; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937 engine_;
};

/// Random chordal graph by perfect-elimination construction: each new vertex
/// attaches to a random clique of earlier vertices whose size follows
/// density (0 = edgeless, 1 = complete).
Graph gen_chordal(int n, double density, std::uint32_t seed);

/// Erdos-Renyi sample repaired into an even-hole-free graph by deleting one
/// random edge of each detected even hole.
Graph gen_ehf(int n, double p, std::uint32_t seed);

/// A transversal instance with a hidden planted solution plus the auxiliary
/// sets a matching solver branch would reconstruct. Structure maps use
/// 1-based labels; entry [0] is unused.
struct PlantedInstance {
    Graph graph;
    CliquePartition parts;          // k+1 parts; position+1 is the label
    VertexSet planted;              // the planted transversal, sorted
    std::vector<Vertex> planted_y;  // per label 1..k+1
    std::vector<Vertex> planted_w;  // per label 1..k
    std::vector<Vertex> planted_x;  // per label 1..k
    std::vector<int> white_structure; // b: label i paired with b[i]
    std::vector<int> red_structure;   // r: arcs (i, r[i]) rooted at k+1
    std::uint32_t seed_used = 0;
};

/// Even-hole-free planted instance realizing the transversal-instance
/// hypotheses for the planted branch. Requires 1 <= k <= 6 and
/// 3 <= part_size <= 8; retries with consecutive seeds when the repair
/// loop cannot fix a sampled instance.
PlantedInstance gen_planted(int k, int part_size, double noise, std::uint32_t seed);

} // namespace ehf::gen
