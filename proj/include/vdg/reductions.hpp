#pragma once

#include "vdg/io.hpp"
#include "vdg/solver.hpp"

namespace vdg {

/// Output of a gadget construction: the graph plus a provenance map telling,
/// for every output vertex, its role and source vertex/edge in the input.
struct GadgetResult {
    Graph graph;
    std::vector<std::string> provenance;  // one "role source" entry per vertex
};

inline void write_provenance(std::ostream& out, const GadgetResult& gr) {
    for (size_t v = 0; v < gr.provenance.size(); ++v)
        out << v << '\t' << gr.provenance[v] << '\n';
}

/// Avoid True: players flip false variables to true; a flip satisfying any
/// clause is forbidden; last mover wins. Exact outcome by memoized search
/// over assignment bitmasks.
inline SolveReport avoid_true_outcome(const DNFFormula& f) {
    if (f.variable_count > 24) throw cap_exceeded("avoid_true_outcome: more than 24 variables");
    for (const auto& c : f.clauses)
        if (c.empty()) throw precondition_error("avoid_true_outcome: empty clause");

    std::vector<uint32_t> clause_masks;
    for (const auto& c : f.clauses) {
        uint32_t m = 0;
        for (int x : c) m |= uint32_t(1) << x;
        clause_masks.push_back(m);
    }
    auto satisfies_some = [&](uint32_t assigned) {
        for (uint32_t cm : clause_masks)
            if ((assigned & cm) == cm) return true;
        return false;
    };

    std::unordered_map<uint32_t, bool> memo;
    uint64_t nodes = 0;
    std::function<bool(uint32_t)> win = [&](uint32_t assigned) -> bool {
        auto it = memo.find(assigned);
        if (it != memo.end()) return it->second;
        ++nodes;
        bool w = false;
        for (int x = 0; x < f.variable_count && !w; ++x) {
            uint32_t bit = uint32_t(1) << x;
            if ((assigned & bit) || satisfies_some(assigned | bit)) continue;
            if (!win(assigned | bit)) w = true;
        }
        memo.emplace(assigned, w);
        return w;
    };

    SolveReport rep;
    rep.outcome = win(0) ? Outcome::N : Outcome::P;
    rep.nodes_expanded = nodes;
    rep.table_entries = memo.size();
    return rep;
}

namespace detail {

struct GadgetBuilder {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> provenance;
    int add(std::string role) {
        provenance.push_back(std::move(role));
        return int(provenance.size()) - 1;
    }
    void link(int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
    GadgetResult finish() const {
        return {Graph::from_edges(int(provenance.size()), edges), provenance};
    }
};

}  // namespace detail

/// Node-Kayles position -> CSG(S) position with the same game tree: a
/// control vertex c with M+1 leaves, a star of M-1 leaves per input vertex,
/// and an M-leaf vertex e_uv per input edge (M = max S). Optionally boosts
/// the girth to any even target by subdividing gadget edges (each new vertex
/// gets M+1 leaves) until the measured girth reaches it.
inline GadgetResult nk_to_csg(const Graph& g, const std::vector<int>& S,
                              std::optional<int> target_girth = std::nullopt) {
    if (S.empty() || *std::min_element(S.begin(), S.end()) < 2)
        throw precondition_error("nk_to_csg: S must be finite with 1 not in S");
    if (target_girth && (*target_girth % 2 != 0 || *target_girth < 4))
        throw precondition_error("nk_to_csg: target girth must be even and >= 4");
    int M = *std::max_element(S.begin(), S.end());

    detail::GadgetBuilder b;
    int c = b.add("control c");
    for (int i = 0; i < M + 1; ++i) b.link(c, b.add("leaf-of c"));
    std::vector<int> star(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        star[v] = b.add("star v" + std::to_string(v));
        b.link(c, star[v]);
        for (int i = 0; i < M - 1; ++i) b.link(star[v], b.add("leaf-of v" + std::to_string(v)));
    }
    for (auto [u, v] : g.edges()) {
        std::string ename = "e" + std::to_string(u) + "_" + std::to_string(v);
        int e = b.add("edge " + ename);
        b.link(e, star[u]);
        b.link(e, star[v]);
        for (int i = 0; i < M; ++i) b.link(e, b.add("leaf-of " + ename));
    }

    GadgetResult out = b.finish();
    long long expect = (long long)M * g.vertex_count() + (long long)(M + 1) * g.edge_count() + M + 2;
    if (out.graph.vertex_count() != expect)
        throw std::logic_error("nk_to_csg: vertex count mismatch");

    while (target_girth && girth(out.graph) != kInfiniteGirth &&
           girth(out.graph) < *target_girth) {
        // One uniform subdivision round over all edges between non-leaf vertices.
        detail::GadgetBuilder nb;
        int n = out.graph.vertex_count();
        for (int v = 0; v < n; ++v) nb.add(out.provenance[v]);
        for (auto [u, v] : out.graph.edges()) {
            if (out.graph.degree(u) == 1 || out.graph.degree(v) == 1) {
                nb.link(u, v);
                continue;
            }
            int mid = nb.add("subdivision " + std::to_string(u) + "-" + std::to_string(v));
            nb.link(u, mid);
            nb.link(mid, v);
            for (int i = 0; i < M + 1; ++i) nb.link(mid, nb.add("leaf-of subdivision"));
        }
        out = nb.finish();
    }
    return out;
}

/// Node-Kayles position -> Non-Disconnecting Node-Kayles position: each edge
/// becomes a twice-subdivided path guarded by a K_{3,3} copy, and all
/// subdivision vertices are joined into a clique (with a toggle for the
/// alternate reading that adds no extra edges).
inline GadgetResult ndnk_gadget(const Graph& g, bool link_subdivisions = true) {
    if (g.edge_count() < 1) throw precondition_error("ndnk_gadget: input has no edges");
    detail::GadgetBuilder b;
    for (int v = 0; v < g.vertex_count(); ++v) b.add("original v" + std::to_string(v));
    std::vector<int> subdivisions;
    for (auto [u, v] : g.edges()) {
        std::string ename = std::to_string(u) + "_" + std::to_string(v);
        int e1 = b.add("subdiv1 e" + ename);
        int e2 = b.add("subdiv2 e" + ename);
        b.link(u, e1);
        b.link(e1, e2);
        b.link(e2, v);
        subdivisions.push_back(e1);
        subdivisions.push_back(e2);
        int part_a[3], part_b[3];
        for (int i = 0; i < 3; ++i) part_a[i] = b.add("k33a e" + ename);
        for (int i = 0; i < 3; ++i) part_b[i] = b.add("k33b e" + ename);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) b.link(part_a[i], part_b[j]);
        b.link(part_a[0], e1);
        b.link(part_a[0], e2);
    }
    if (link_subdivisions)
        for (size_t i = 0; i < subdivisions.size(); ++i)
            for (size_t j = i + 1; j < subdivisions.size(); ++j)
                if (!(j == i + 1 && i % 2 == 0))  // e1-e2 of one edge already linked
                    b.link(subdivisions[i], subdivisions[j]);
    return b.finish();
}

/// Avoid True DNF -> CSG({k}) on a split graph: a clique vertex v_i with
/// k-1 pendant leaves per variable, plus two clause vertices per clause,
/// each adjacent to the clause's variable clique vertices. The duplicate
/// clause vertex makes a clause-satisfying move strand at least two
/// components even in the endgame where nothing else remains, so it is
/// illegal in every position, not just the early ones.
inline GadgetResult avoidtrue_to_csgk(const DNFFormula& f, int k) {
    if (k < 2) throw precondition_error("avoidtrue_to_csgk: k must be >= 2");
    detail::GadgetBuilder b;
    std::vector<int> var(f.variable_count);
    for (int i = 0; i < f.variable_count; ++i) {
        var[i] = b.add("variable x" + std::to_string(i));
        for (int j = 0; j < k - 1; ++j) b.add("leaf-of x" + std::to_string(i));
    }
    for (int i = 0; i < f.variable_count; ++i) {
        for (int j = 0; j < k - 1; ++j) b.link(var[i], var[i] + 1 + j);
        for (int j = i + 1; j < f.variable_count; ++j) b.link(var[i], var[j]);
    }
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        for (int copy = 0; copy < 2; ++copy) {
            int c = b.add("clause C" + std::to_string(j) +
                          (copy ? " duplicate" : ""));
            for (int x : f.clauses[j]) b.link(var[x], c);
        }
    }
    GadgetResult out = b.finish();
    if (out.graph.vertex_count() != k * f.variable_count + 2 * int(f.clauses.size()))
        throw std::logic_error("avoidtrue_to_csgk: vertex count mismatch");
    return out;
}

/// Graph-isomorphism instance -> edge-disjoint-involution instance: each
/// side gains a universal vertex and a pendant leaf on it, every edge is
/// subdivided once, and the two sides are returned as a disjoint union
/// (K_2 when the vertex counts differ).
inline GadgetResult gi_gadget(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) {
        detail::GadgetBuilder b;
        int a = b.add("k2");
        int c = b.add("k2");
        b.link(a, c);
        return b.finish();
    }
    detail::GadgetBuilder b;
    for (int side = 0; side < 2; ++side) {
        const Graph& g = side == 0 ? g1 : g2;
        std::string tag = side == 0 ? "g1" : "g2";
        std::vector<int> base(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            base[v] = b.add(tag + " v" + std::to_string(v));
        int uni = b.add(tag + " universal");
        int leaf = b.add(tag + " leaf");
        // every edge (original, universal attachments, and the leaf edge)
        // subdivided once
        auto sub_link = [&](int x, int y, const std::string& why) {
            int mid = b.add(tag + " mid " + why);
            b.link(x, mid);
            b.link(mid, y);
        };
        for (auto [u, v] : g.edges())
            sub_link(base[u], base[v], std::to_string(u) + "-" + std::to_string(v));
        for (int v = 0; v < g.vertex_count(); ++v)
            sub_link(uni, base[v], "u-" + std::to_string(v));
        sub_link(uni, leaf, "u-leaf");
    }
    return b.finish();
}

/// Two-colorability of the whole graph.
inline bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> q{s};
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int u = q[qi];
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Structural check that the vertex set splits into a clique and a stable set.
inline bool is_split_graph(const Graph& g) {
    // Greedy: order by degree descending; the top-degree prefix that forms a
    // clique with a stable remainder witnesses splitness (checked exactly by
    // trying all prefix cuts).
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b)
                                                                    : a < b; });
    for (int cut = 0; cut <= n; ++cut) {
        bool ok = true;
        for (int i = 0; i < cut && ok; ++i)
            for (int j = i + 1; j < cut && ok; ++j)
                if (!g.has_edge(order[i], order[j])) ok = false;
        for (int i = cut; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (g.has_edge(order[i], order[j])) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace vdg
