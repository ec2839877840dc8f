#pragma once

#include <queue>

#include "vdg/solver.hpp"

namespace vdg {

/// NDAK on a tree: no strategy exists, so a greedy playout counting moves
/// decides the outcome. A move {u,v} is legal on a tree residue exactly when
/// uv is an edge with deg(u)+deg(v) <= 3 (the K_2 case included). Runs in
/// O(m log m) via a heap of candidate pendant pairs, always playing the
/// lexicographically smallest one.
inline std::pair<Outcome, int> tree_outcome(const Graph& g) {
    if (!is_tree(g)) throw precondition_error("tree_outcome: input is not a tree");
    int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> alive(n, 1);

    using Pair = std::pair<int, int>;
    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> heap;
    auto offer = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (alive[u] && alive[v] && deg[u] + deg[v] <= 3) heap.push({u, v});
    };
    for (auto [u, v] : g.edges()) offer(u, v);

    int moves = 0;
    while (!heap.empty()) {
        auto [u, v] = heap.top();
        heap.pop();
        if (!alive[u] || !alive[v]) continue;  // stale entry
        alive[u] = alive[v] = 0;
        ++moves;
        for (int x : {u, v})
            for (int w : g.neighbors(x))
                if (alive[w]) --deg[w];
        // degree drops may have made new pairs legal
        for (int x : {u, v})
            for (int w : g.neighbors(x))
                if (alive[w])
                    for (int y : g.neighbors(w)) offer(w, y);
    }
    return {moves % 2 == 1 ? Outcome::N : Outcome::P, moves};
}

namespace detail {

/// Vertex sets of the biconnected components (standard lowpoint DFS with an
/// edge stack). Isolated vertices yield no component.
inline std::vector<std::vector<int>> biconnected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        num[u] = low[u] = counter++;
        for (int w : g.neighbors(u)) {
            if (num[w] == -1) {
                estack.push_back({u, w});
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= num[u]) {
                    std::vector<int> verts;
                    std::vector<char> seen(n, 0);
                    while (true) {
                        auto [a, b] = estack.back();
                        estack.pop_back();
                        for (int x : {a, b})
                            if (!seen[x]) {
                                seen[x] = 1;
                                verts.push_back(x);
                            }
                        if (a == u && b == w) break;
                    }
                    std::sort(verts.begin(), verts.end());
                    comps.push_back(std::move(verts));
                }
            } else if (w != parent && num[w] < num[u]) {
                estack.push_back({u, w});
                low[u] = std::min(low[u], num[w]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (num[s] == -1) dfs(s, -1);
    return comps;
}

}  // namespace detail

/// Every biconnected component is a clique.
inline bool is_clique_tree(const Graph& g) {
    for (const auto& comp : detail::biconnected_components(g))
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!g.has_edge(comp[i], comp[j])) return false;
    return true;
}

/// NDAK on a clique tree: all possible moves end up being played, so a
/// deterministic greedy playout gives the outcome in polynomial time.
inline std::pair<Outcome, int> clique_tree_outcome(const Graph& g) {
    if (g.vertex_count() < 1 || !is_connected(g, VertexSubset::all(g.vertex_count())))
        throw precondition_error("clique_tree_outcome: input must be connected");
    if (!is_clique_tree(g))
        throw precondition_error("clique_tree_outcome: a biconnected component is not a clique");
    Ruleset rs = Ruleset::ndak();
    VertexSubset alive = VertexSubset::all(g.vertex_count());
    int moves = 0;
    while (true) {
        auto ms = legal_moves(rs, g, alive);
        if (ms.empty()) break;
        alive = alive - ms.front().removed;  // lexicographically smallest
        ++moves;
    }
    return {moves % 2 == 1 ? Outcome::N : Outcome::P, moves};
}

struct ThresholdPartition {
    VertexSubset clique;  // K, minimal
    VertexSubset stable;  // S, maximal
    int clique_order = 0;
    std::string construction_word;  // over {i,u}, in construction order
    bool clique_twin_free = false;
};

/// Recognize a threshold graph by repeatedly stripping a currently isolated
/// or universal vertex, then shrink K to its minimal form (a clique vertex
/// with no stable neighbor moves to S).
inline ThresholdPartition threshold_partition(const Graph& g) {
    int n = g.vertex_count();
    VertexSubset left = VertexSubset::all(n);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::string reversed_word;
    std::vector<int> strip_order;
    VertexSubset clique(n), stable(n);
    while (!left.empty()) {
        int remaining = left.count();
        int pick = -1;
        char kind = 0;
        for (int v = left.first(); v != -1 && pick == -1; v = left.next(v))
            if (deg[v] == 0) {
                pick = v;
                kind = 'i';
            }
        for (int v = left.first(); v != -1 && pick == -1; v = left.next(v))
            if (deg[v] == remaining - 1) {
                pick = v;
                kind = 'u';
            }
        if (pick == -1) throw precondition_error("threshold_partition: not a threshold graph");
        (kind == 'i' ? stable : clique).set(pick);
        reversed_word += kind;
        left.reset(pick);
        for (int w : g.neighbors(pick))
            if (left.test(w)) --deg[w];
    }

    // Minimal K / maximal S: a clique vertex with no neighbor in S may move.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = clique.first(); v != -1; v = clique.next(v)) {
            bool has_stable_neighbor = false;
            for (int w : g.neighbors(v))
                if (stable.test(w)) has_stable_neighbor = true;
            if (!has_stable_neighbor) {
                clique.reset(v);
                stable.set(v);
                changed = true;
                break;
            }
        }
    }

    ThresholdPartition tp;
    tp.clique = clique;
    tp.stable = stable;
    tp.clique_order = clique.count();
    tp.construction_word = std::string(reversed_word.rbegin(), reversed_word.rend());
    TwinPartition twins = twin_classes(g, VertexSubset::all(n));
    tp.clique_twin_free = true;
    for (int u = clique.first(); u != -1; u = clique.next(u))
        for (int v = clique.next(u); v != -1; v = clique.next(v))
            if (twins.class_of[u] == twins.class_of[v]) tp.clique_twin_free = false;
    return tp;
}

namespace detail {

/// Plain depth-bounded negamax over move orbits; for the short games left
/// after the threshold case analysis.
inline bool short_game_first_wins(const Ruleset& rs, const Graph& g, const VertexSubset& alive) {
    for (auto& m : move_orbits(rs, g, alive))
        if (!short_game_first_wins(rs, g, alive - m.removed)) return true;
    return false;
}

}  // namespace detail

/// NDAK outcome on a twin-free-clique threshold graph. For |K| >= 5 the game
/// is outcome-equivalent to the {1,2} subtraction game on a heap of |K|-1;
/// small cliques follow the case analysis, with |K| = 2 settled by bounded
/// search.
inline Outcome threshold_outcome(const Graph& g) {
    int n_verts = g.vertex_count();
    if (n_verts < 1 || !is_connected(g, VertexSubset::all(n_verts)))
        throw precondition_error("threshold_outcome: input must be connected");
    ThresholdPartition tp = threshold_partition(g);
    if (!tp.clique_twin_free)
        throw precondition_error("threshold_outcome: clique has twins");
    int n = tp.clique_order;
    if (n >= 1 && tp.stable.count() < n)
        throw precondition_error("threshold_outcome: |S| < |K| under a minimal twin-free clique");
    switch (n) {
        case 0:
            return Outcome::P;  // connected and K empty means a single vertex
        case 1:
            return n_verts == 2 || n_verts == 3 ? Outcome::N : Outcome::P;
        case 2:
            return detail::short_game_first_wins(Ruleset::ndak(), g,
                                                 VertexSubset::all(n_verts))
                       ? Outcome::N
                       : Outcome::P;
        case 3:
            return Outcome::N;
        case 4:
            return Outcome::P;
        default:
            return subtraction_heap_grundy({1, 2}, n - 1) != 0 ? Outcome::N : Outcome::P;
    }
}

}  // namespace vdg
