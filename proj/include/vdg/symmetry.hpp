#pragma once

#include <random>

#include "vdg/solver.hpp"

namespace vdg {

/// Edge-disjoint involutive automorphism: f∘f = id, adjacency-preserving,
/// and no edge meets its image. Non-isolated vertices can never be fixed.
struct Involution {
    std::vector<int> mapping;
};

/// Validity check, independent of how the involution was found.
inline bool is_edge_disjoint_involution(const Graph& g, const Involution& f) {
    int n = g.vertex_count();
    if (int(f.mapping.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        int fv = f.mapping[v];
        if (fv < 0 || fv >= n || f.mapping[fv] != v) return false;
        if (fv == v && g.degree(v) > 0) return false;
    }
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) {
            if (!g.has_edge(f.mapping[u], f.mapping[w])) return false;
            if (u < w) {
                int a = f.mapping[u], b = f.mapping[w];
                if (a == u || a == w || b == u || b == w) return false;
            }
        }
    return true;
}

/// Backtracking search for an edge-disjoint involutive automorphism.
/// Sufficient constraints: matched pairs are non-adjacent, non-isolated
/// vertices are never fixed, and the pairing preserves adjacency — together
/// these already imply edge-disjointness.
inline std::optional<Involution> find_edge_disjoint_involution(const Graph& g,
                                                               int vertex_cap = 24) {
    int n = g.vertex_count();
    if (n > vertex_cap) throw cap_exceeded("find_edge_disjoint_involution: size cap exceeded");

    // Invariant classes to prune candidate images.
    std::vector<std::pair<int, std::vector<int>>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        inv[v] = {g.degree(v), std::move(nd)};
    }

    std::vector<int> map(n, -1);
    // Isolated vertices may stay fixed.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) map[v] = v;

    std::function<bool()> rec = [&]() -> bool {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (map[v] == -1) {
                u = v;
                break;
            }
        if (u == -1) return true;
        for (int v = u + 1; v < n; ++v) {
            if (map[v] != -1 || inv[u] != inv[v] || g.has_edge(u, v)) continue;
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
                if (map[w] == -1) continue;
                if (g.has_edge(u, w) != g.has_edge(v, map[w])) ok = false;
                if (g.has_edge(v, w) != g.has_edge(u, map[w])) ok = false;
            }
            if (!ok) continue;
            map[u] = v;
            map[v] = u;
            if (rec()) return true;
            map[u] = -1;
            map[v] = -1;
        }
        return false;
    };
    if (!rec()) return std::nullopt;
    Involution f{std::move(map)};
    return f;
}

/// Plays out Arc-Kayles lines where the second player mirrors every move e
/// with f(e). Exhaustive over first-player choices for graphs up to 12
/// vertices, randomized beyond; returns true iff the mirror answer was always
/// legal and the second player always moved last. For graphs up to 10
/// vertices also cross-checks that the solved outcome is P.
inline bool verify_symmetry_strategy(const Graph& g, const Involution& f) {
    if (!is_edge_disjoint_involution(g, f))
        throw precondition_error("verify_symmetry_strategy: invalid involution");
    int n = g.vertex_count();
    Ruleset rs = Ruleset::arc_kayles();

    auto mirrored = [&](const Move& m) {
        Move r{VertexSubset(n)};
        for (int v = m.removed.first(); v != -1; v = m.removed.next(v)) r.removed.set(f.mapping[v]);
        return r;
    };

    std::function<bool(const VertexSubset&)> all_lines = [&](const VertexSubset& alive) -> bool {
        for (auto& m : legal_moves(rs, g, alive)) {
            VertexSubset mid = alive - m.removed;
            Move ans = mirrored(m);
            if (!ans.removed.subset_of(mid)) return false;
            auto vs = ans.removed.to_vector();
            if (vs.size() != 2 || !g.has_edge(vs[0], vs[1])) return false;
            if (!all_lines(mid - ans.removed)) return false;
        }
        return true;  // second player moved last on every closed line
    };

    bool ok;
    if (n <= 12) {
        ok = all_lines(VertexSubset::all(n));
    } else {
        ok = true;
        std::mt19937_64 rng(0x5eed);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            VertexSubset alive = VertexSubset::all(n);
            while (true) {
                auto moves = legal_moves(rs, g, alive);
                if (moves.empty()) break;
                const Move& m = moves[std::uniform_int_distribution<size_t>(
                    0, moves.size() - 1)(rng)];
                alive = alive - m.removed;
                Move ans = mirrored(m);
                if (!ans.removed.subset_of(alive)) {
                    ok = false;
                    break;
                }
                alive = alive - ans.removed;
            }
        }
    }
    if (ok && n <= 10) ok = solve_outcome(rs, g).outcome == Outcome::P;
    return ok;
}

}  // namespace vdg
