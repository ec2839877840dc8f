#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vdg {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Subset of the vertices of a fixed host graph, stored as a bit vector.
/// Cheap to copy and hashable, so it doubles as the transposition key.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static VertexSubset all(int n) {
        VertexSubset s(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }
    static VertexSubset none(int n) { return VertexSubset(n); }
    static VertexSubset of(int n, std::initializer_list<int> vs) {
        VertexSubset s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 if empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }
    /// Smallest member > v, or -1.
    int next(int v) const {
        ++v;
        if (v >= n_) return -1;
        size_t i = size_t(v) >> 6;
        uint64_t w = w_[i] & (~uint64_t(0) << (v & 63));
        while (true) {
            if (w) return int(i * 64 + __builtin_ctzll(w));
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    VertexSubset& operator|=(const VertexSubset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSubset& operator&=(const VertexSubset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// Set difference.
    VertexSubset& operator-=(const VertexSubset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { return a |= b; }
    friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) { return a &= b; }
    friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) { return a -= b; }

    bool operator==(const VertexSubset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSubset& o) const { return !(*this == o); }
    /// Bitstring order from vertex 0; gives the subset-lexicographic tie-break order.
    bool operator<(const VertexSubset& o) const {
        for (int a = first(), b = o.first();;) {
            if (a == -1) return b != -1;
            if (b == -1) return false;
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
    }

    bool intersects(const VertexSubset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSubset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct SubsetHash {
    size_t operator()(const VertexSubset& s) const { return s.hash(); }
};

/// Immutable simple undirected graph with dense 0-based vertex indices.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw parse_error("negative vertex count");
        Graph g;
        g.adj_.resize(n);
        for (auto [u, v] : edges) g.add_edge_checked(u, v);
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return int(adj_.size()); }
    int edge_count() const {
        int m = 0;
        for (auto& nb : adj_) m += int(nb.size());
        return m / 2;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        int other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(nb.begin(), nb.end(), other);
    }

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void add_edge_checked(int u, int v) {
        int n = vertex_count();
        if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error("vertex index out of range");
        if (u == v) throw parse_error("self-loop forbidden");
        if (has_edge_unsorted(u, v)) throw parse_error("duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    bool has_edge_unsorted(int u, int v) const {
        for (int w : adj_[u])
            if (w == v) return true;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

/// Connectivity of the induced subgraph on `alive`. The empty subset counts
/// as connected so that final clearing moves stay legal.
inline bool is_connected(const Graph& g, const VertexSubset& alive) {
    int start = alive.first();
    if (start == -1) return true;
    VertexSubset seen(g.vertex_count());
    std::vector<int> stack{start};
    seen.set(start);
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (alive.test(w) && !seen.test(w)) {
                seen.set(w);
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive.count();
}

/// Maximal connected pieces of `alive`, ordered by smallest vertex.
inline std::vector<VertexSubset> connected_components(const Graph& g, const VertexSubset& alive) {
    std::vector<VertexSubset> out;
    VertexSubset seen(g.vertex_count());
    for (int s = alive.first(); s != -1; s = alive.next(s)) {
        if (seen.test(s)) continue;
        VertexSubset comp(g.vertex_count());
        std::vector<int> stack{s};
        comp.set(s);
        seen.set(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (alive.test(w) && !comp.test(w)) {
                    comp.set(w);
                    seen.set(w);
                    stack.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

struct HangingTree {
    int core_root;    // attachment vertex inside the core, -1 when the core is empty
    int tree_attach;  // tree vertex incident to the attachment edge, -1 when core empty
    VertexSubset tree;
};

struct CoreDecomposition {
    VertexSubset core;
    std::vector<HangingTree> hanging_trees;
};

/// 2-core by iterative deletion of degree-1 vertices, plus the hanging trees.
/// For an acyclic input the core is empty and the single hanging tree is the
/// whole graph (core_root = -1); callers must special-case that.
inline CoreDecomposition two_core(const Graph& g) {
    int n = g.vertex_count();
    VertexSubset all = VertexSubset::all(n);
    if (!is_connected(g, all)) throw precondition_error("two_core: graph must be connected");

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    VertexSubset core = all;
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!core.test(v)) continue;
        core.reset(v);
        for (int w : g.neighbors(v))
            if (core.test(w) && --deg[w] == 1) queue.push_back(w);
    }

    CoreDecomposition out;
    out.core = core;
    VertexSubset rest = all - core;
    for (const VertexSubset& t : connected_components(g, rest)) {
        HangingTree ht{-1, -1, t};
        for (int v = t.first(); v != -1 && ht.core_root == -1; v = t.next(v))
            for (int w : g.neighbors(v))
                if (core.test(w)) {
                    ht.core_root = w;
                    ht.tree_attach = v;
                    break;
                }
        out.hanging_trees.push_back(std::move(ht));
    }
    // Deterministic order by smallest tree vertex (connected_components already does this).
    return out;
}

inline int component_count(const Graph& g, const VertexSubset& alive) {
    return int(connected_components(g, alive).size());
}

/// m - n + #components; 0 exactly for forests.
inline int feedback_edge_number(const Graph& g) {
    return g.edge_count() - g.vertex_count() + component_count(g, VertexSubset::all(g.vertex_count()));
}

constexpr int kInfiniteGirth = -1;

/// Length of the shortest cycle, or kInfiniteGirth for forests.
inline int girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int u = q[qi];
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
           is_connected(g, VertexSubset::all(g.vertex_count()));
}

/// Induced subgraph with densely reindexed vertices (ascending original
/// order). old_of[i] gives the original index of new vertex i.
struct InducedGraph {
    Graph graph;
    std::vector<int> old_of;
    std::vector<int> new_of;  // -1 for vertices outside the subset
};

inline InducedGraph induced_subgraph(const Graph& g, const VertexSubset& keep) {
    InducedGraph out;
    out.new_of.assign(g.vertex_count(), -1);
    for (int v = keep.first(); v != -1; v = keep.next(v)) {
        out.new_of[v] = int(out.old_of.size());
        out.old_of.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = keep.first(); v != -1; v = keep.next(v))
        for (int w : g.neighbors(v))
            if (w > v && keep.test(w)) edges.emplace_back(out.new_of[v], out.new_of[w]);
    out.graph = Graph::from_edges(int(out.old_of.size()), edges);
    return out;
}

/// Twin classes on the induced subgraph: u ~ v iff N(u)\{v} = N(v)\{u}
/// within `alive` (covers open and closed twins). Returned as a class id per
/// vertex (-1 outside alive) plus the list of classes.
struct TwinPartition {
    std::vector<int> class_of;         // -1 for vertices outside alive
    std::vector<std::vector<int>> classes;
};

inline TwinPartition twin_classes(const Graph& g, const VertexSubset& alive) {
    int n = g.vertex_count();
    std::vector<VertexSubset> nb(n, VertexSubset(n));
    for (int v = alive.first(); v != -1; v = alive.next(v))
        for (int w : g.neighbors(v))
            if (alive.test(w)) nb[v].set(w);

    TwinPartition tp;
    tp.class_of.assign(n, -1);
    for (int v = alive.first(); v != -1; v = alive.next(v)) {
        bool placed = false;
        for (size_t c = 0; c < tp.classes.size() && !placed; ++c) {
            int u = tp.classes[c][0];
            VertexSubset nu = nb[u], nv = nb[v];
            nu.reset(v);
            nv.reset(u);
            if (nu == nv) {
                tp.classes[c].push_back(v);
                tp.class_of[v] = int(c);
                placed = true;
            }
        }
        if (!placed) {
            tp.class_of[v] = int(tp.classes.size());
            tp.classes.push_back({v});
        }
    }
    return tp;
}

/// Backtracking isomorphism search for desk-scale graphs (default cap 12
/// vertices). Returns a mapping from g1 vertices to g2 vertices, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                        int vertex_cap = 12) {
    int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (n > vertex_cap) throw cap_exceeded("find_isomorphism: size cap exceeded");
    if (n == 0) return std::vector<int>{};

    // Invariant per vertex: (degree, sorted multiset of neighbor degrees).
    auto invariants = [](const Graph& g) {
        std::vector<std::pair<int, std::vector<int>>> inv(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> nd;
            for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
            std::sort(nd.begin(), nd.end());
            inv[v] = {g.degree(v), std::move(nd)};
        }
        return inv;
    };
    auto inv1 = invariants(g1), inv2 = invariants(g2);
    {
        auto s1 = inv1, s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    // Map most-constrained (rarest invariant, then highest degree) vertices first.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> rarity(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (inv1[u] == inv1[v]) ++rarity[v];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rarity[a] != rarity[b]) return rarity[a] < rarity[b];
        if (g1.degree(a) != g1.degree(b)) return g1.degree(a) > g1.degree(b);
        return a < b;
    });

    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int u = order[idx];
        for (int v = 0; v < n; ++v) {
            if (used[v] || inv1[u] != inv2[v]) continue;
            bool ok = true;
            for (int w = 0; w < n && ok; ++w)
                if (map[w] != -1 && g1.has_edge(u, w) != g2.has_edge(v, map[w])) ok = false;
            if (!ok) continue;
            map[u] = v;
            used[v] = 1;
            if (rec(idx + 1)) return true;
            map[u] = -1;
            used[v] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return map;
}

}  // namespace vdg
