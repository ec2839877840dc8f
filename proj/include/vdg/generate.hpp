#pragma once

#include <random>
#include <set>

#include "vdg/graph.hpp"

namespace vdg {

inline Graph make_path(int n) {
    if (n < 1) throw precondition_error("path: n < 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw precondition_error("cycle: n < 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

/// Star K_{1,q}: center 0 plus q leaves.
inline Graph make_star(int q) {
    if (q < 0) throw precondition_error("star: q < 0");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= q; ++i) e.emplace_back(0, i);
    return Graph::from_edges(q + 1, e);
}

/// Subdivided star with three paths of the given lengths from center 0.
inline Graph make_spider(int l1, int l2, int l3) {
    if (l1 < 1 || l2 < 1 || l3 < 1) throw precondition_error("spider: path length < 1");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : {l1, l2, l3}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, e);
}

inline Graph make_grid(int r, int c) {
    if (r < 1 || c < 1) throw precondition_error("grid: dimensions < 1");
    auto id = [c](int i, int j) { return i * c + j; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (j + 1 < c) e.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < r) e.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph::from_edges(r * c, e);
}

inline Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

/// Threshold graph from a construction word over {isolated, universal},
/// applied left to right ('i' adds an isolated vertex, 'u' a universal one).
inline Graph make_threshold(const std::string& word) {
    if (word.empty()) throw precondition_error("threshold: empty word");
    std::vector<std::pair<int, int>> e;
    int n = 0;
    for (char ch : word) {
        if (ch == 'i') {
            ++n;
        } else if (ch == 'u') {
            for (int v = 0; v < n; ++v) e.emplace_back(v, n);
            ++n;
        } else {
            throw precondition_error("threshold: word must be over {i,u}");
        }
    }
    return Graph::from_edges(n, e);
}

/// Random spanning tree by attaching each vertex to a uniform earlier one.
inline Graph make_random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw precondition_error("random tree: n < 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> d(0, v - 1);
        e.emplace_back(d(rng), v);
    }
    return Graph::from_edges(n, e);
}

/// Connected graph with n vertices and m edges (random spanning tree plus
/// random extra edges); feedback edge number is m - n + 1.
inline Graph make_random_connected(int n, int m, uint64_t seed) {
    if (n < 1) throw precondition_error("random_connected: n < 1");
    long long max_m = (long long)n * (n - 1) / 2;
    if (m < n - 1 || m > max_m) throw precondition_error("random_connected: m not realizable");
    std::mt19937_64 rng(seed);
    Graph tree = make_random_tree(n, rng);
    std::set<std::pair<int, int>> es;
    for (auto pr : tree.edges()) es.insert(pr);
    std::uniform_int_distribution<int> dv(0, n - 1);
    while (int(es.size()) < m) {
        int u = dv(rng), v = dv(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        es.insert({u, v});
    }
    return Graph::from_edges(n, {es.begin(), es.end()});
}

/// Clique tree: blocks of the given sizes, each attached at a uniformly
/// chosen existing vertex (the first block stands alone).
inline Graph make_clique_tree(const std::vector<int>& block_sizes, uint64_t seed) {
    if (block_sizes.empty()) throw precondition_error("clique_tree: no blocks");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    int n = 0;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        int s = block_sizes[b];
        if (s < 1 || (b > 0 && s < 2)) throw precondition_error("clique_tree: bad block size");
        std::vector<int> verts;
        if (b > 0) {
            std::uniform_int_distribution<int> d(0, n - 1);
            verts.push_back(d(rng));
        }
        for (int i = (b > 0 ? 1 : 0); i < s; ++i) verts.push_back(n++);
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) e.emplace_back(verts[i], verts[j]);
    }
    return Graph::from_edges(n, e);
}

/// Split graph: clique of the given size, stable vertices each joined to a
/// random non-empty clique subset (density = edge probability in percent).
inline Graph make_split(int clique, int stable, int density_pct, uint64_t seed) {
    if (clique < 1 || stable < 0 || density_pct < 0 || density_pct > 100)
        throw precondition_error("split: invalid parameters");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pct(0, 99);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) e.emplace_back(u, v);
    for (int s = 0; s < stable; ++s) {
        int sv = clique + s;
        bool any = false;
        for (int u = 0; u < clique; ++u)
            if (pct(rng) < density_pct) {
                e.emplace_back(u, sv);
                any = true;
            }
        if (!any) e.emplace_back(int(std::uniform_int_distribution<int>(0, clique - 1)(rng)), sv);
    }
    return Graph::from_edges(clique + stable, e);
}

/// Parse a family spec string, e.g. "path:7", "grid:2,4", "threshold:iiu",
/// "clique_tree:1,3,2,4" (seed then block sizes), "split:7,4,3,50",
/// "random_connected:10,12,3", "spider:1,2,3", "star:4", "cycle:6".
inline Graph generate(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<long long> args;
    std::string word;
    if (colon != std::string::npos) {
        word = spec.substr(colon + 1);
        std::string cur;
        for (char ch : word + ",") {
            if (ch == ',') {
                if (!cur.empty()) {
                    try {
                        args.push_back(std::stoll(cur));
                    } catch (...) {
                        args.clear();
                        break;
                    }
                }
                cur.clear();
            } else {
                cur += ch;
            }
        }
    }
    auto need = [&](size_t k) {
        if (args.size() != k) throw precondition_error("family " + name + ": expected " +
                                                       std::to_string(k) + " arguments");
    };
    if (name == "path") { need(1); return make_path(int(args[0])); }
    if (name == "cycle") { need(1); return make_cycle(int(args[0])); }
    if (name == "star") { need(1); return make_star(int(args[0])); }
    if (name == "spider") { need(3); return make_spider(int(args[0]), int(args[1]), int(args[2])); }
    if (name == "grid") { need(2); return make_grid(int(args[0]), int(args[1])); }
    if (name == "complete") { need(1); return make_complete(int(args[0])); }
    if (name == "threshold") return make_threshold(word);
    if (name == "clique_tree") {
        if (args.size() < 2) throw precondition_error("clique_tree: need seed and block sizes");
        std::vector<int> blocks(args.begin() + 1, args.end());
        return make_clique_tree(blocks, uint64_t(args[0]));
    }
    if (name == "split") { need(4); return make_split(int(args[1]), int(args[2]), int(args[3]), uint64_t(args[0])); }
    if (name == "random_connected") { need(3); return make_random_connected(int(args[0]), int(args[1]), uint64_t(args[2])); }
    throw precondition_error("unknown graph family: " + name);
}

}  // namespace vdg
