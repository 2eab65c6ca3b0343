#include "ehf/bitree.hpp"

#include <algorithm>
#include <set>

namespace ehf::bitree {

namespace {

std::vector<std::vector<int>> white_adjacency(const BiTree& t) {
    std::vector<std::vector<int>> adj(t.m + 1);
    for (auto [a, b] : t.white) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

// White edges plus undirected red arcs.
std::vector<std::vector<int>> union_adjacency(const BiTree& t) {
    std::vector<std::set<int>> adj(t.m + 1);
    for (auto [a, b] : t.white) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    for (int v = 1; v <= t.m; ++v) {
        int p = t.red_parent[v];
        if (p != 0) {
            adj[v].insert(p);
            adj[p].insert(v);
        }
    }
    std::vector<std::vector<int>> out(t.m + 1);
    for (int v = 1; v <= t.m; ++v) out[v].assign(adj[v].begin(), adj[v].end());
    return out;
}

// Connected blocks of the union graph minus v, each sorted, ordered by minimum.
std::vector<std::vector<int>> components_without(const BiTree& t, int v) {
    auto adj = union_adjacency(t);
    std::vector<bool> seen(t.m + 1, false);
    seen[v] = true;
    std::vector<std::vector<int>> blocks;
    for (int r = 1; r <= t.m; ++r) {
        if (seen[r]) continue;
        std::vector<int> block, stack{r};
        seen[r] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            block.push_back(x);
            for (int w : adj[x])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
}

// Unique white tree path a..b (inclusive); empty if disconnected.
std::vector<int> white_path(const BiTree& t, const std::vector<std::vector<int>>& wadj, int a, int b) {
    std::vector<int> prev(t.m + 1, 0);
    std::vector<int> queue{a};
    prev[a] = a;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (x == b) break;
        for (int w : wadj[x])
            if (prev[w] == 0) {
                prev[w] = x;
                queue.push_back(w);
            }
    }
    if (prev[b] == 0) return {};
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Directed red path a..v following parent arcs; empty unless v is a strict
// or equal red ancestor of a.
std::vector<int> red_path_up(const BiTree& t, int a, int v) {
    std::vector<int> path{a};
    int x = a;
    while (x != v) {
        x = t.red_parent[x];
        if (x == 0) return {};
        path.push_back(x);
    }
    return path;
}

// First common vertex of the two parent chains (always exists: the root).
int red_meet(const BiTree& t, int a, int b) {
    std::vector<bool> on_a(t.m + 1, false);
    for (int x = a; x != 0; x = t.red_parent[x]) on_a[x] = true;
    for (int x = b; x != 0; x = t.red_parent[x])
        if (on_a[x]) return x;
    return 0;
}

bool is_endpoint(const std::vector<int>& path, int x) {
    return x == path.front() || x == path.back();
}

// Any vertex on two paths must be a common endpoint of those two paths.
bool strictly_disjoint(const std::vector<const std::vector<int>*>& paths) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            for (int x : *paths[i])
                if (std::find(paths[j]->begin(), paths[j]->end(), x) != paths[j]->end())
                    if (!is_endpoint(*paths[i], x) || !is_endpoint(*paths[j], x)) return false;
    return true;
}

std::vector<int> red_depths(const BiTree& t) {
    std::vector<int> depth(t.m + 1, -1);
    depth[t.root] = 0;
    for (int v = 1; v <= t.m; ++v) {
        if (depth[v] >= 0) continue;
        std::vector<int> chain;
        int x = v;
        while (depth[x] < 0) {
            chain.push_back(x);
            x = t.red_parent[x];
        }
        int d = depth[x];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
    }
    return depth;
}

// Bi-path white pattern over an explicit red-path order; nullopt when the
// white edges touching the order's vertices do not match for any t.
std::optional<int> bipath_split(const BiTree& t, const std::vector<int>& order,
                                const std::vector<std::pair<int, int>>& actual_white) {
    const int n = static_cast<int>(order.size());
    int split = 1;
    for (int i = 2; i <= n - 1; ++i)
        if (t.white_adjacent(order[0], order[i - 1])) split = i;
    std::set<std::pair<int, int>> expected;
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    expected.insert(norm(order.front(), order.back()));
    for (int i = 2; i <= split; ++i) expected.insert(norm(order[0], order[i - 1]));
    for (int j = split + 1; j <= n - 1; ++j)
        expected.insert(norm(order[j - 1], order.back()));
    std::set<std::pair<int, int>> actual;
    for (auto [a, b] : actual_white) actual.insert(norm(a, b));
    if (actual != expected) return std::nullopt;
    return split;
}

} // namespace

bool BiTree::white_adjacent(int a, int b) const {
    for (auto [x, y] : white)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

BiTree make_bitree(int m, std::vector<std::pair<int, int>> white,
                   const std::vector<std::pair<int, int>>& red_arcs, int root) {
    BiTree t;
    t.m = m;
    if (root < 1 || root > m) throw std::invalid_argument("make_bitree: root out of range");
    t.root = root;
    for (auto& [a, b] : white) {
        if (a < 1 || a > m || b < 1 || b > m || a == b)
            throw std::invalid_argument("make_bitree: bad white edge");
        if (a > b) std::swap(a, b);
    }
    std::sort(white.begin(), white.end());
    t.white = std::move(white);
    t.red_parent.assign(m + 1, 0);
    for (auto [tail, head] : red_arcs) {
        if (tail < 1 || tail > m || head < 1 || head > m || tail == head)
            throw std::invalid_argument("make_bitree: bad red arc");
        if (t.red_parent[tail] != 0)
            throw std::invalid_argument("make_bitree: vertex " + std::to_string(tail) +
                                        " has two out-arcs");
        t.red_parent[tail] = head;
    }
    return t;
}

std::string validate(const BiTree& t) {
    if (t.m < 1) return "vertex count must be at least 1";
    if (t.root < 1 || t.root > t.m) return "root out of range";
    if (t.red_parent.size() != t.m + 1) return "red parent map has wrong size";

    // White: spanning tree.
    if (static_cast<int>(t.white.size()) != t.m - 1)
        return "white edge count is " + std::to_string(t.white.size()) + ", expected " +
               std::to_string(t.m - 1);
    std::set<std::pair<int, int>> seen_edges;
    for (auto [a, b] : t.white) {
        if (a < 1 || a > t.m || b < 1 || b > t.m || a == b) return "white edge endpoint out of range";
        auto e = std::minmax(a, b);
        if (!seen_edges.insert({e.first, e.second}).second) return "duplicate white edge";
    }
    {
        auto wadj = white_adjacency(t);
        std::vector<bool> seen(t.m + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        int count = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++count;
            for (int w : wadj[x])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        if (count != t.m) return "white edges do not span the vertex set";
    }

    // Red: in-arborescence rooted at root.
    if (t.red_parent[t.root] != 0) return "root has an out-arc";
    for (int v = 1; v <= t.m; ++v) {
        if (v == t.root) continue;
        int p = t.red_parent[v];
        if (p < 1 || p > t.m) return "vertex " + std::to_string(v) + " lacks an out-arc";
        if (p == v) return "red self-loop";
    }
    for (int v = 1; v <= t.m; ++v) {
        int steps = 0, x = v;
        while (x != t.root) {
            x = t.red_parent[x];
            if (++steps > t.m) return "red arcs contain a cycle";
        }
    }
    return {};
}

std::optional<Separation> find_separation(const BiTree& t) {
    for (int v = 1; v <= t.m; ++v) {
        auto blocks = components_without(t, v);
        if (blocks.size() < 2) continue;
        Separation s;
        s.v = v;
        s.X = blocks[0];
        for (std::size_t i = 1; i < blocks.size(); ++i)
            s.Y.insert(s.Y.end(), blocks[i].begin(), blocks[i].end());
        std::sort(s.Y.begin(), s.Y.end());
        return s;
    }
    return std::nullopt;
}

std::optional<DirectedObstruction> find_directed_obstruction(const BiTree& t) {
    auto wadj = white_adjacency(t);
    for (int a = 1; a <= t.m; ++a)
        for (int b = a + 1; b <= t.m; ++b) {
            auto pab = white_path(t, wadj, a, b);
            if (pab.size() != 2 && pab.size() != 3) continue; // length 1 or 2
            int v = red_meet(t, a, b);
            if (v == 0 || v == a || v == b) continue;
            auto pav = red_path_up(t, a, v);
            auto pbv = red_path_up(t, b, v);
            if (!strictly_disjoint({&pab, &pav, &pbv})) continue;
            return DirectedObstruction{a, b, v, std::move(pab), std::move(pav), std::move(pbv)};
        }
    return std::nullopt;
}

std::optional<AlternatingObstruction> find_alternating_obstruction(const BiTree& t) {
    auto wadj = white_adjacency(t);
    auto red_between = [&](int x, int y) -> std::vector<int> {
        // Path sequence from x to y; arcs may run in either sense.
        auto up = red_path_up(t, x, y);
        if (!up.empty()) return up;
        auto down = red_path_up(t, y, x);
        if (!down.empty()) {
            std::reverse(down.begin(), down.end());
            return down;
        }
        return {};
    };
    for (int a = 1; a <= t.m; ++a)
        for (int b = 1; b <= t.m; ++b) {
            if (b == a) continue;
            auto pab = white_path(t, wadj, a, b);
            if (pab.empty()) continue;
            for (int c = 1; c <= t.m; ++c) {
                if (c == a || c == b) continue;
                auto pbc = red_between(b, c);
                if (pbc.empty()) continue;
                for (int d = 1; d <= t.m; ++d) {
                    if (d == a || d == b || d == c) continue;
                    auto pcd = white_path(t, wadj, c, d);
                    if (pcd.empty()) continue;
                    if (pab.size() != 2 && pcd.size() != 2) continue;
                    auto pda = red_between(d, a);
                    if (pda.empty()) continue;
                    if (!strictly_disjoint({&pab, &pbc, &pcd, &pda})) continue;
                    return AlternatingObstruction{a, b, c, d, pab, pbc, pcd, pda};
                }
            }
        }
    return std::nullopt;
}

std::optional<BiPathCert> as_bipath(const BiTree& t) {
    if (t.m < 2) return std::nullopt;
    std::vector<int> indeg(t.m + 1, 0);
    for (int v = 1; v <= t.m; ++v) {
        int p = t.red_parent[v];
        if (p != 0) ++indeg[p];
    }
    int start = 0;
    for (int v = 1; v <= t.m; ++v) {
        if (indeg[v] > 1) return std::nullopt;
        if (indeg[v] == 0) start = v;
    }
    std::vector<int> order;
    for (int x = start; x != 0; x = t.red_parent[x]) order.push_back(x);
    if (static_cast<int>(order.size()) != t.m) return std::nullopt;
    auto split = bipath_split(t, order, t.white);
    if (!split) return std::nullopt;
    return BiPathCert{std::move(order), *split};
}

std::optional<BiSpiderDecomp> as_bispider(const BiTree& t) {
    if (t.m < 2) return std::nullopt;
    std::vector<std::vector<int>> red_children(t.m + 1);
    for (int v = 1; v <= t.m; ++v) {
        int p = t.red_parent[v];
        if (p != 0) red_children[p].push_back(v);
    }
    for (int v = 1; v <= t.m; ++v)
        if (v != t.root && red_children[v].size() > 1) return std::nullopt;

    // Each red child of the root heads one leg (a chain walked to its far end).
    std::vector<int> leg_id(t.m + 1, -1);
    std::vector<std::vector<int>> leg_orders;
    for (int c : red_children[t.root]) {
        std::vector<int> down{c};
        while (!red_children[down.back()].empty())
            down.push_back(red_children[down.back()].front());
        std::reverse(down.begin(), down.end()); // far end first
        down.push_back(t.root);
        for (int v : down)
            if (v != t.root) leg_id[v] = static_cast<int>(leg_orders.size());
        leg_orders.push_back(std::move(down));
    }
    for (int v = 1; v <= t.m; ++v)
        if (v != t.root && leg_id[v] < 0) return std::nullopt;

    // Distribute white edges to legs; an edge across two legs disqualifies.
    std::vector<std::vector<std::pair<int, int>>> leg_white(leg_orders.size());
    for (auto [a, b] : t.white) {
        int la = a == t.root ? -1 : leg_id[a];
        int lb = b == t.root ? -1 : leg_id[b];
        if (la >= 0 && lb >= 0 && la != lb) return std::nullopt;
        int l = la >= 0 ? la : lb;
        if (l < 0) return std::nullopt;
        leg_white[l].emplace_back(a, b);
    }

    BiSpiderDecomp d;
    d.root = t.root;
    for (std::size_t l = 0; l < leg_orders.size(); ++l) {
        auto split = bipath_split(t, leg_orders[l], leg_white[l]);
        if (!split) return std::nullopt;
        d.legs.push_back(BiPathCert{leg_orders[l], *split});
    }
    return d;
}

std::string validate(const BiTree& t, const Separation& s) {
    std::vector<int> tag(t.m + 1, 0); // 1=v, 2=X, 3=Y
    if (s.v < 1 || s.v > t.m) return "separation vertex out of range";
    tag[s.v] = 1;
    if (s.X.empty() || s.Y.empty()) return "separation side empty";
    for (int x : s.X) {
        if (x < 1 || x > t.m || tag[x]) return "X not disjoint or out of range";
        tag[x] = 2;
    }
    for (int y : s.Y) {
        if (y < 1 || y > t.m || tag[y]) return "Y not disjoint or out of range";
        tag[y] = 3;
    }
    for (int v = 1; v <= t.m; ++v)
        if (!tag[v]) return "vertex " + std::to_string(v) + " not covered";
    for (auto [a, b] : t.white) {
        int ta = tag[a], tb = tag[b];
        if ((ta == 2 && tb == 3) || (ta == 3 && tb == 2)) return "white edge crosses the separation";
    }
    for (int v = 1; v <= t.m; ++v) {
        int p = t.red_parent[v];
        if (p == 0) continue;
        int tv = tag[v], tp = tag[p];
        if ((tv == 2 && tp == 3) || (tv == 3 && tp == 2)) return "red arc crosses the separation";
    }
    return {};
}

namespace {

std::string check_white_path(const BiTree& t, const std::vector<int>& p, int a, int b) {
    if (p.size() < 2) return "path too short";
    if (p.front() != a || p.back() != b) return "path endpoints wrong";
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!t.white_adjacent(p[i], p[i + 1])) return "missing white edge on path";
    return {};
}

std::string check_red_path(const BiTree& t, const std::vector<int>& p) {
    if (p.size() < 2) return "red path too short";
    bool forward = true, backward = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (t.red_parent[p[i]] != p[i + 1]) forward = false;
        if (t.red_parent[p[i + 1]] != p[i]) backward = false;
    }
    if (!forward && !backward) return "not a directed red path in either sense";
    return {};
}

} // namespace

std::string validate(const BiTree& t, const DirectedObstruction& o) {
    if (o.a == o.b || o.a == o.v || o.b == o.v) return "vertices not distinct";
    if (auto e = check_white_path(t, o.pab, o.a, o.b); !e.empty()) return e;
    if (o.pab.size() > 3) return "white path longer than two";
    if (auto e = check_red_path(t, o.pav); !e.empty()) return e;
    if (o.pav.front() != o.a || o.pav.back() != o.v) return "pav endpoints wrong";
    if (t.red_parent[o.pav.front()] != o.pav[1]) return "pav not directed a to v";
    if (auto e = check_red_path(t, o.pbv); !e.empty()) return e;
    if (o.pbv.front() != o.b || o.pbv.back() != o.v) return "pbv endpoints wrong";
    if (t.red_parent[o.pbv.front()] != o.pbv[1]) return "pbv not directed b to v";
    if (!strictly_disjoint({&o.pab, &o.pav, &o.pbv})) return "paths not internally disjoint";
    return {};
}

std::string validate(const BiTree& t, const AlternatingObstruction& o) {
    std::vector<int> vs{o.a, o.b, o.c, o.d};
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return "vertices not distinct";
    if (auto e = check_white_path(t, o.pab, o.a, o.b); !e.empty()) return e;
    if (auto e = check_white_path(t, o.pcd, o.c, o.d); !e.empty()) return e;
    if (o.pab.size() != 2 && o.pcd.size() != 2) return "no white path of length one";
    if (auto e = check_red_path(t, o.pbc); !e.empty()) return e;
    if (o.pbc.front() != o.b || o.pbc.back() != o.c) return "pbc endpoints wrong";
    if (auto e = check_red_path(t, o.pda); !e.empty()) return e;
    if (o.pda.front() != o.d || o.pda.back() != o.a) return "pda endpoints wrong";
    if (!strictly_disjoint({&o.pab, &o.pbc, &o.pcd, &o.pda})) return "paths not internally disjoint";
    std::set<int> ab(o.pab.begin(), o.pab.end());
    for (int x : o.pcd)
        if (ab.count(x)) return "pab and pcd intersect";
    std::set<int> bc(o.pbc.begin(), o.pbc.end());
    for (int x : o.pda)
        if (bc.count(x)) return "pbc and pda intersect";
    return {};
}

std::string validate(const BiTree& t, const BiPathCert& c) {
    if (static_cast<int>(c.order.size()) != t.m) return "ordering does not cover the vertex set";
    std::vector<bool> seen(t.m + 1, false);
    for (int v : c.order) {
        if (v < 1 || v > t.m || seen[v]) return "ordering is not a permutation";
        seen[v] = true;
    }
    const int n = t.m;
    for (int i = 0; i + 1 < n; ++i)
        if (t.red_parent[c.order[i]] != c.order[i + 1])
            return "red arcs are not the consecutive pairs of the ordering";
    if (t.red_parent[c.order.back()] != 0) return "last vertex is not the red root";
    if (c.t < 1 || c.t > n - 1) return "split out of range";
    auto split = bipath_split(t, c.order, t.white);
    if (!split) return "white edges do not match the bi-path pattern";
    if (*split != c.t) return "split value mismatch";
    return {};
}

std::string validate(const BiTree& t, const BiSpiderDecomp& d) {
    if (d.root != t.root) return "decomposition root differs from tree root";
    std::vector<int> covered(t.m + 1, 0);
    std::set<std::pair<int, int>> white_seen;
    std::size_t red_count = 0;
    for (const auto& leg : d.legs) {
        if (leg.order.size() < 2) return "leg with fewer than two vertices";
        if (leg.order.back() != t.root) return "leg does not end at the root";
        for (std::size_t i = 0; i + 1 < leg.order.size(); ++i) {
            int v = leg.order[i];
            if (v == t.root) return "root appears inside a leg";
            if (covered[v]++) return "legs share a non-root vertex";
            if (t.red_parent[v] != leg.order[i + 1]) return "leg is not a red chain";
            ++red_count;
        }
        // Leg white pattern, on the leg's vertices.
        std::vector<std::pair<int, int>> lw;
        std::set<int> leg_set(leg.order.begin(), leg.order.end());
        for (auto [a, b] : t.white)
            if (leg_set.count(a) && leg_set.count(b)) lw.emplace_back(a, b);
        auto split = bipath_split(t, leg.order, lw);
        if (!split || *split != leg.t) return "leg white edges do not match its certificate";
        for (auto [a, b] : lw) white_seen.insert(std::minmax(a, b));
    }
    for (int v = 1; v <= t.m; ++v)
        if (v != t.root && !covered[v]) return "vertex not covered by any leg";
    if (red_count != static_cast<std::size_t>(t.m) - 1) return "red arc count mismatch";
    if (white_seen.size() != t.white.size()) return "white edge not covered by any leg";
    return {};
}

BiTree glue(const BiTree& t1, int v, const BiTree& t2) {
    if (!validate(t1).empty() || !validate(t2).empty())
        throw std::invalid_argument("glue: invalid input bi-tree");
    if (v < 1 || v > t1.m) throw std::invalid_argument("glue: vertex out of range");
    std::vector<int> relabel(t2.m + 1, 0);
    relabel[t2.root] = v;
    int next = t1.m;
    for (int u = 1; u <= t2.m; ++u)
        if (u != t2.root) relabel[u] = ++next;
    BiTree out;
    out.m = t1.m + t2.m - 1;
    out.root = t1.root;
    out.white = t1.white;
    for (auto [a, b] : t2.white) {
        int x = relabel[a], y = relabel[b];
        out.white.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.white.begin(), out.white.end());
    out.red_parent.assign(out.m + 1, 0);
    for (int u = 1; u <= t1.m; ++u) out.red_parent[u] = t1.red_parent[u];
    for (int u = 1; u <= t2.m; ++u) {
        int p = t2.red_parent[u];
        if (p != 0) out.red_parent[relabel[u]] = relabel[p];
    }
    if (auto err = validate(out); !err.empty())
        throw invariant_violation("glue produced an invalid bi-tree: " + err);
    return out;
}

RestrictedBiTree restrict(const BiTree& t, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != keep.size()) throw std::invalid_argument("restrict: duplicate vertices");
    if (sorted.empty() || sorted.front() < 1 || sorted.back() > t.m)
        throw std::invalid_argument("restrict: vertices out of range");

    std::vector<int> new_label(t.m + 1, 0);
    RestrictedBiTree out;
    out.orig.assign(sorted.size() + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        new_label[sorted[i]] = static_cast<int>(i) + 1;
        out.orig[i + 1] = sorted[i];
    }
    out.tree.m = static_cast<int>(sorted.size());
    for (auto [a, b] : t.white) {
        int x = new_label[a], y = new_label[b];
        if (x && y) out.tree.white.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.tree.white.begin(), out.tree.white.end());
    out.tree.red_parent.assign(sorted.size() + 1, 0);
    int root = 0;
    if (new_label[t.root] != 0) root = new_label[t.root];
    for (int v : sorted) {
        int p = t.red_parent[v];
        int nv = new_label[v];
        if (p != 0 && new_label[p] != 0) {
            out.tree.red_parent[nv] = new_label[p];
        } else if (v != t.root) {
            // v's parent was dropped; v is the root of the restriction if the
            // old root is gone and v is the only such vertex.
            if (root != 0 && root != nv)
                throw invariant_violation("restrict: red arcs do not form a single in-arborescence");
            if (new_label[t.root] == 0) root = nv;
            else throw invariant_violation("restrict: non-root vertex lost its out-arc");
        }
    }
    out.tree.root = root;
    if (auto err = validate(out.tree); !err.empty())
        throw invariant_violation("restrict produced an invalid bi-tree: " + err);
    return out;
}

std::optional<BiSpiderSeparation> find_bispider_separation(const BiTree& t) {
    if (find_directed_obstruction(t) || find_alternating_obstruction(t))
        throw std::invalid_argument("find_bispider_separation: bi-tree has an obstruction");
    if (as_bispider(t))
        throw std::invalid_argument("find_bispider_separation: bi-tree is already a bi-spider");

    auto depth = red_depths(t);
    std::vector<int> candidates;
    for (int v = 1; v <= t.m; ++v)
        if (v != t.root) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end(), [&](int x, int y) {
        if (depth[x] != depth[y])
            return depth[x] > depth[y];
        return x < y;
    });

    for (int v : candidates) {
        auto blocks = components_without(t, v);
        if (blocks.size() < 2) continue;
        std::vector<int> X;
        for (const auto& block : blocks) {
            if (std::find(block.begin(), block.end(), t.root) != block.end()) continue;
            std::vector<int> trial = X;
            trial.insert(trial.end(), block.begin(), block.end());
            std::vector<int> kept = trial;
            kept.push_back(v);
            auto sub = restrict(t, kept);
            if (as_bispider(sub.tree)) X = std::move(trial);
        }
        if (X.empty()) continue;
        std::sort(X.begin(), X.end());
        Separation sep;
        sep.v = v;
        sep.X = X;
        for (int u = 1; u <= t.m; ++u)
            if (u != v && std::find(X.begin(), X.end(), u) == X.end()) sep.Y.push_back(u);
        std::vector<int> kept = X;
        kept.push_back(v);
        auto sub = restrict(t, kept);
        auto decomp = as_bispider(sub.tree);
        if (!decomp) throw invariant_violation("find_bispider_separation: grown X lost the bi-spider");
        return BiSpiderSeparation{std::move(sep), std::move(sub.tree), std::move(sub.orig),
                                  std::move(*decomp)};
    }
    return std::nullopt;
}

} // namespace ehf::bitree
