#pragma once

#include <map>
#include <set>
#include <tuple>

#include "vdg/graph.hpp"

namespace vdg {

namespace detail {

/// Canonical edge bitmask: minimum over all vertex permutations. Only viable
/// for very small n; the corpus sweeps stay at n <= 7.
inline uint64_t canonical_edge_mask(const Graph& g) {
    int n = g.vertex_count();
    auto bit = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return u * n + v;  // upper-triangle slot, n^2 bits is fine for n <= 8
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t mask = 0;
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                if (u < v) mask |= uint64_t(1) << bit(perm[u], perm[v]);
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace detail

/// All graphs on exactly n vertices up to isomorphism (n <= 7), by vertex
/// augmentation with canonical-form dedup. Results are cached per n.
inline const std::vector<Graph>& all_graphs_upto_iso(int n) {
    if (n < 1 || n > 7) throw cap_exceeded("all_graphs_upto_iso: supported range is 1..7");
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph::from_edges(1, {}));
    } else {
        const std::vector<Graph>& smaller = all_graphs_upto_iso(n - 1);
        std::set<uint64_t> seen;
        for (const Graph& h : smaller) {
            for (uint32_t nbmask = 0; nbmask < (uint32_t(1) << (n - 1)); ++nbmask) {
                auto edges = h.edges();
                for (int v = 0; v < n - 1; ++v)
                    if (nbmask & (uint32_t(1) << v)) edges.emplace_back(v, n - 1);
                Graph g = Graph::from_edges(n, edges);
                uint64_t key = detail::canonical_edge_mask(g);
                if (seen.insert(key).second) out.push_back(std::move(g));
            }
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

/// Connected graphs on exactly n vertices up to isomorphism (n <= 7).
inline std::vector<Graph> connected_graphs_upto_iso(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs_upto_iso(n))
        if (is_connected(g, VertexSubset::all(n))) out.push_back(g);
    return out;
}

namespace detail {

inline std::string ahu_rooted(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
        if (w != parent) kids.push_back(ahu_rooted(g, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

inline std::vector<int> tree_centroids(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(n), removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int left = n;
    while (left > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --left;
            for (int w : g.neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> cs;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) cs.push_back(v);
    return cs;
}

}  // namespace detail

/// Canonical AHU string of a free tree (centroid-rooted).
inline std::string tree_canonical_string(const Graph& g) {
    if (!is_tree(g)) throw precondition_error("tree_canonical_string: not a tree");
    auto cs = detail::tree_centroids(g);
    if (cs.size() == 1) return detail::ahu_rooted(g, cs[0], -1);
    std::string a = detail::ahu_rooted(g, cs[0], cs[1]);
    std::string b = detail::ahu_rooted(g, cs[1], cs[0]);
    if (a > b) std::swap(a, b);
    return "[" + a + b + "]";
}

/// All free trees on exactly n vertices up to isomorphism, by leaf
/// augmentation with AHU dedup.
inline const std::vector<Graph>& all_trees_upto_iso(int n) {
    if (n < 1 || n > 14) throw cap_exceeded("all_trees_upto_iso: supported range is 1..14");
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph::from_edges(1, {}));
    } else {
        std::set<std::string> seen;
        for (const Graph& h : all_trees_upto_iso(n - 1)) {
            for (int v = 0; v < n - 1; ++v) {
                auto edges = h.edges();
                edges.emplace_back(v, n - 1);
                Graph t = Graph::from_edges(n, edges);
                if (seen.insert(tree_canonical_string(t)).second) out.push_back(std::move(t));
            }
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

/// All connected clique trees (block graphs) on 1..n_max vertices up to
/// isomorphism, by attaching clique blocks at existing vertices and deduping
/// with invariant buckets plus isomorphism checks.
inline std::vector<Graph> all_clique_trees_upto_iso(int n_max) {
    if (n_max < 1 || n_max > 10)
        throw cap_exceeded("all_clique_trees_upto_iso: supported range is 1..10");

    using Key = std::tuple<int, int, std::vector<int>>;  // n, m, sorted degrees
    auto key_of = [](const Graph& g) {
        std::vector<int> degs;
        for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end());
        return Key{g.vertex_count(), g.edge_count(), std::move(degs)};
    };

    std::map<Key, std::vector<Graph>> buckets;
    std::vector<Graph> out;
    std::vector<Graph> frontier{Graph::from_edges(1, {})};
    auto try_insert = [&](const Graph& g) {
        Key k = key_of(g);
        for (const Graph& h : buckets[k])
            if (find_isomorphism(g, h)) return false;
        buckets[k].push_back(g);
        out.push_back(g);
        return true;
    };
    try_insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            int s = g.vertex_count();
            for (int b = 2; s + b - 1 <= n_max; ++b) {
                for (int c = 0; c < s; ++c) {
                    auto edges = g.edges();
                    std::vector<int> block{c};
                    for (int i = 1; i < b; ++i) block.push_back(s + i - 1);
                    for (size_t i = 0; i < block.size(); ++i)
                        for (size_t j = i + 1; j < block.size(); ++j)
                            edges.emplace_back(block[i], block[j]);
                    Graph bigger = Graph::from_edges(s + b - 1, edges);
                    if (try_insert(bigger)) next.push_back(bigger);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return a.vertex_count() != b.vertex_count() ? a.vertex_count() < b.vertex_count()
                                                    : a.edge_count() < b.edge_count();
    });
    return out;
}

}  // namespace vdg
