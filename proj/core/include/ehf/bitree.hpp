#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehf/graph.hpp"

namespace ehf::bitree {

/// One vertex set 1..m carrying a white tree and a red in-arborescence.
struct BiTree {
    int m = 0;
    /// Unordered white edges, stored with first < second.
    std::vector<std::pair<int, int>> white;
    /// red_parent[v] = head of v's unique out-arc; 0 for the root. Index 0 unused.
    std::vector<int> red_parent;
    int root = 0;

    bool white_adjacent(int a, int b) const;
};

BiTree make_bitree(int m, std::vector<std::pair<int, int>> white,
                   const std::vector<std::pair<int, int>>& red_arcs, int root);

/// (v, X, Y): {v} + X + Y partition the vertices, X and Y nonempty, and no
/// white edge or red arc has one end in X and one in Y.
struct Separation {
    int v = 0;
    std::vector<int> X;
    std::vector<int> Y;
};

/// White path of length 1 or 2 between a and b plus red paths from a and b
/// into v; any vertex on two of the paths is a common endpoint of both.
struct DirectedObstruction {
    int a = 0, b = 0, v = 0;
    std::vector<int> pab; // a .. b in the white tree
    std::vector<int> pav; // a .. v along red arcs
    std::vector<int> pbv; // b .. v along red arcs
};

/// White a-b and c-d paths alternating with red b-c and d-a paths (each red
/// path directed in either sense); at least one white path has length one.
struct AlternatingObstruction {
    int a = 0, b = 0, c = 0, d = 0;
    std::vector<int> pab; // white, a .. b
    std::vector<int> pbc; // red, b .. c
    std::vector<int> pcd; // white, c .. d
    std::vector<int> pda; // red, d .. a
};

/// Ordering v1..vn with red arcs v1->v2->..->vn and white edges
/// {v1vn} + {v1v2..v1vt} + {v(t+1)vn..v(n-1)vn}.
struct BiPathCert {
    std::vector<int> order;
    int t = 0;
};

/// Legs are bi-paths meeting only at the root; every leg's order ends there.
struct BiSpiderDecomp {
    int root = 0;
    std::vector<BiPathCert> legs;
};

/// Empty string when t satisfies both BiTree invariants, else the first
/// violation found.
std::string validate(const BiTree& t);

std::optional<Separation> find_separation(const BiTree& t);
std::optional<DirectedObstruction> find_directed_obstruction(const BiTree& t);
std::optional<AlternatingObstruction> find_alternating_obstruction(const BiTree& t);

std::optional<BiPathCert> as_bipath(const BiTree& t);
std::optional<BiSpiderDecomp> as_bispider(const BiTree& t);

/// Independent re-validation of returned certificates against t.
std::string validate(const BiTree& t, const Separation& s);
std::string validate(const BiTree& t, const DirectedObstruction& o);
std::string validate(const BiTree& t, const AlternatingObstruction& o);
std::string validate(const BiTree& t, const BiPathCert& c);
std::string validate(const BiTree& t, const BiSpiderDecomp& d);

struct BiSpiderSeparation {
    Separation sep;    // root lies in sep.Y
    BiTree spider;     // t minus sep.Y, relabeled, rooted at sep.v's image
    std::vector<int> spider_orig; // spider label -> label in t (index 0 unused)
    BiSpiderDecomp decomp;        // decomposition of spider
};

/// For an obstruction-free bi-tree that is not itself a bi-spider: the
/// deepest separation (red depth, then smallest id) isolating a bi-path,
/// with X grown inclusion-maximal while t minus Y stays a bi-spider.
/// Throws std::invalid_argument when called on a bi-spider or an
/// obstructed bi-tree.
std::optional<BiSpiderSeparation> find_bispider_separation(const BiTree& t);

/// Disjoint union with root(t2) identified with v; result rooted at root(t1).
BiTree glue(const BiTree& t1, int v, const BiTree& t2);

struct RestrictedBiTree {
    BiTree tree;
    std::vector<int> orig; // new label -> old label (index 0 unused)
};

/// Induced white edges and red arcs on keep; root is the old root when kept,
/// else the unique kept vertex whose red parent was dropped. Throws
/// invariant_violation when the induced structures are not a bi-tree.
RestrictedBiTree restrict(const BiTree& t, const std::vector<int>& keep);

} // namespace ehf::bitree
