#pragma once

#include <array>
#include <fstream>
#include <set>

#include "vdg/tractable.hpp"

namespace vdg {

// ---------------------------------------------------------------------------
// Kernelization for NDAK (csg({2})) parameterized by the feedback edge
// number. Four rules run to a fixpoint:
//   1. trim excess pendant leaves (keep at most 3 per vertex),
//   2. play out pairs of legal tree moves,
//   3. replace hanging forests without pending moves (or with exactly one)
//      by a minimal catalog tree of the same signature,
//   4. replace long decorated core paths between branch/move vertices by the
//      shortest catalog path with the same boundary signature.
// All rules preserve the NDAK outcome; rule 2 removes exactly two plies at a
// time, so the player to move never changes.
// ---------------------------------------------------------------------------

namespace detail {

/// NDAK legality of the pair {u, v} on the full graph: alive edge whose
/// removal keeps the residue connected.
inline bool ndak_legal(const Graph& g, const VertexSubset& alive, int u, int v) {
    if (!alive.test(u) || !alive.test(v) || !g.has_edge(u, v)) return false;
    VertexSubset rest = alive;
    rest.reset(u);
    rest.reset(v);
    return is_connected(g, rest);
}

}  // namespace detail

struct KernelOptions {
    int l_max = 12;             // longest catalog path length
    std::string catalog_path;   // optional persistence file for the path catalog
    bool use_rule4 = true;
};

struct KernelInstance {
    Graph graph;
    int to_move_parity = 0;  // rules never flip the player to move
    std::vector<std::string> trace;
    std::optional<Outcome> resolved;  // set when the input was already a tree
};

struct KernelReport {
    int original_n = 0, original_m = 0;
    int final_n = 0, final_m = 0;
    int fen = 0;
    int branch_vertices = 0;
    bool branch_bound_ok = true;
    std::vector<std::pair<std::string, int>> rule_deltas;  // rule, vertices removed
    std::optional<Outcome> outcome;                        // for tree inputs
    std::vector<std::string> unmatched_segments;
};

struct KernelResult {
    KernelInstance instance;
    KernelReport report;
};

// ---------------------------------------------------------------------------
// Forest signatures and the six catalog trees
// ---------------------------------------------------------------------------

enum class RootRemovedClass { Disconnected, N, P };

struct TreeSignature {
    Outcome with_root = Outcome::P;
    RootRemovedClass without_root = RootRemovedClass::Disconnected;
    bool operator==(const TreeSignature& o) const {
        return with_root == o.with_root && without_root == o.without_root;
    }
};

namespace detail {

/// Outcome of NDAK played on a forest given as a host subset: total maximal
/// play length summed over tree components.
inline std::pair<Outcome, int> forest_outcome(const Graph& host, const VertexSubset& verts) {
    int moves = 0;
    for (const VertexSubset& c : connected_components(host, verts))
        moves += tree_outcome(induced_subgraph(host, c).graph).second;
    return {moves % 2 == 1 ? Outcome::N : Outcome::P, moves};
}

}  // namespace detail

/// Signature of a hanging tree T (a tree inside `host` induced by
/// `tree_verts`, rooted at `root` which must belong to it).
inline TreeSignature tree_signature(const Graph& host, const VertexSubset& tree_verts, int root) {
    if (!tree_verts.test(root)) throw precondition_error("tree_signature: root not in tree");
    InducedGraph t = induced_subgraph(host, tree_verts);
    if (!is_tree(t.graph)) throw precondition_error("tree_signature: subset is not a tree");
    TreeSignature sig;
    sig.with_root = tree_outcome(t.graph).first;
    VertexSubset rest = tree_verts;
    rest.reset(root);
    if (rest.empty() || connected_components(host, rest).size() > 1) {
        sig.without_root = RootRemovedClass::Disconnected;
    } else {
        sig.without_root = detail::forest_outcome(host, rest).first == Outcome::N
                               ? RootRemovedClass::N
                               : RootRemovedClass::P;
    }
    return sig;
}

namespace detail {

struct CatalogTree {
    Graph tree;  // vertex 0 is the root
    TreeSignature sig;
};

/// The six minimal replacement trees, one per signature class. Checked
/// against tree_signature on first use.
inline const std::vector<CatalogTree>& catalog_trees() {
    static std::vector<CatalogTree> cat = [] {
        std::vector<CatalogTree> out;
        auto add = [&](std::vector<std::pair<int, int>> edges, int n, Outcome w,
                       RootRemovedClass wo) {
            out.push_back({Graph::from_edges(n, edges), {w, wo}});
        };
        add({{0, 1}, {0, 2}}, 3, Outcome::N, RootRemovedClass::Disconnected);
        add({{0, 1}, {0, 2}, {0, 3}}, 4, Outcome::P, RootRemovedClass::Disconnected);
        add({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}, 7, Outcome::N,
            RootRemovedClass::N);
        add({{0, 1}, {1, 2}, {1, 3}}, 4, Outcome::P, RootRemovedClass::N);
        add({{0, 1}, {1, 2}, {2, 3}, {2, 4}}, 5, Outcome::P, RootRemovedClass::P);
        add({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}, 6, Outcome::N, RootRemovedClass::P);
        for (const CatalogTree& ct : out) {
            TreeSignature check =
                tree_signature(ct.tree, VertexSubset::all(ct.tree.vertex_count()), 0);
            if (!(check == ct.sig)) throw std::logic_error("catalog tree signature mismatch");
        }
        return out;
    }();
    return cat;
}

inline const CatalogTree& catalog_tree_for(const TreeSignature& sig) {
    for (const CatalogTree& ct : catalog_trees())
        if (ct.sig == sig) return ct;
    throw std::logic_error("catalog_tree_for: signature has no catalog tree");
}

/// Smallest non-root leaf of a catalog tree.
inline int smallest_nonroot_leaf(const Graph& t) {
    for (int v = 1; v < t.vertex_count(); ++v)
        if (t.degree(v) == 1) return v;
    throw std::logic_error("smallest_nonroot_leaf: none found");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Extended boundary signature of a decorated path segment
// ---------------------------------------------------------------------------

/// Behaviour of a decorated path hung between two boundary vertices, encoded
/// so that two segments with equal signatures are interchangeable in any
/// host. `H` must be a tree containing two marker leaves a_marker/b_marker
/// standing for the boundary; u/v are the segment ends adjacent to them.
/// Scenarios: (1) untouched, (2) after the left boundary move {a,u},
/// (3) after the right boundary move {b,v}, (4) after both, (5) with both
/// boundary vertices gone. Each scenario yields outcome N/P of the remaining
/// forest-with-markers — or X when it falls apart — plus the parity of the
/// remaining non-marker vertices. Every interior move pair is recorded with
/// the outcome/parity of the piece(s) still touching a marker.
struct ExtendedOutcome {
    struct Scenario {
        char tag = 'P';  // 'N', 'P' or 'X'
        int parity = 0;
    };
    std::array<Scenario, 5> scenarios;
    std::set<std::string> move_pairs;
    int total_parity = 0;

    std::string encode() const {
        std::string s;
        for (const Scenario& sc : scenarios) {
            s += sc.tag;
            s += char('0' + sc.parity);
            s += ';';
        }
        s += '|';
        for (const std::string& mp : move_pairs) s += mp + '&';
        s += '|';
        s += char('0' + total_parity);
        return s;
    }
};

inline ExtendedOutcome extended_outcome(const Graph& h, int a_marker, int b_marker, int u,
                                        int v) {
    if (!is_tree(h)) throw precondition_error("extended_outcome: host must be a tree");
    int n = h.vertex_count();
    VertexSubset all = VertexSubset::all(n);

    auto nonmarker_count = [&](const VertexSubset& s) {
        return s.count() - (s.test(a_marker) ? 1 : 0) - (s.test(b_marker) ? 1 : 0);
    };
    auto eval = [&](std::vector<int> removed) -> ExtendedOutcome::Scenario {
        VertexSubset rem = all;
        for (int x : removed) rem.reset(x);
        if (rem.empty()) return {'P', 0};
        int par = nonmarker_count(rem) % 2;
        if (connected_components(h, rem).size() > 1) return {'X', par};
        Outcome o = detail::forest_outcome(h, rem).first;
        return {o == Outcome::N ? 'N' : 'P', par};
    };

    ExtendedOutcome out;
    out.scenarios[0] = eval({});
    out.scenarios[1] = eval({a_marker, u});
    out.scenarios[2] = eval({b_marker, v});
    out.scenarios[3] = eval({a_marker, u, b_marker, v});
    out.scenarios[4] = eval({a_marker, b_marker});
    out.total_parity = (n - 2) % 2;

    auto piece_code = [&](const VertexSubset& comp) {
        Outcome o = detail::forest_outcome(h, comp).first;
        std::string s;
        s += o == Outcome::N ? 'N' : 'P';
        s += char('0' + nonmarker_count(comp) % 2);
        return s;
    };
    for (auto [x, y] : h.edges()) {
        if (x == a_marker || x == b_marker || y == a_marker || y == b_marker) continue;
        VertexSubset rem = all;
        rem.reset(x);
        rem.reset(y);
        auto comps = connected_components(h, rem);
        const VertexSubset* ca = nullptr;
        const VertexSubset* cb = nullptr;
        bool orphan = false;
        for (const VertexSubset& c : comps) {
            bool has_a = c.test(a_marker), has_b = c.test(b_marker);
            if (has_a) ca = &c;
            if (has_b) cb = &c;
            if (!has_a && !has_b) orphan = true;
        }
        // A markerless piece means the move strands vertices in every host;
        // such a move is never legal, so it contributes nothing.
        if (orphan) continue;
        if (ca == cb) {
            out.move_pairs.insert("J" + piece_code(*ca));
        } else {
            out.move_pairs.insert(piece_code(*ca) + ":" + piece_code(*cb));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path catalog: decorated paths indexed by extended signature
// ---------------------------------------------------------------------------

/// Decorations a catalog path vertex may carry: nothing, pendant leaves, or
/// one of the rooted catalog trees with the root merged into the path vertex.
enum class Decoration {
    None,
    Leaf,
    TwoLeaves,
    ThreeLeaves,
    Star3,        // spine vertex - center - 2 leaves
    Chain1Star4,  // 1-vertex chain, then center with 2 leaves
    Chain2Star5,  // 2-vertex chain, then center with 2 leaves
    Chain3Star6,  // 3-vertex chain, then center with 2 leaves
};

inline int decoration_size(Decoration d) {
    switch (d) {
        case Decoration::None: return 0;
        case Decoration::Leaf: return 1;
        case Decoration::TwoLeaves: return 2;
        case Decoration::ThreeLeaves: return 3;
        case Decoration::Star3: return 3;
        case Decoration::Chain1Star4: return 4;
        case Decoration::Chain2Star5: return 5;
        case Decoration::Chain3Star6: return 6;
    }
    return 0;
}

namespace detail {

/// Appends the decoration's vertices/edges below spine vertex `s`;
/// `next_free` is advanced past the new vertices.
inline void grow_decoration(Decoration d, int s, int& next_free,
                            std::vector<std::pair<int, int>>& edges) {
    int chain = 0, star_leaves = 0;
    switch (d) {
        case Decoration::None: return;
        case Decoration::Leaf: chain = 1; star_leaves = 0; break;
        case Decoration::TwoLeaves:
            edges.emplace_back(s, next_free++);
            edges.emplace_back(s, next_free++);
            return;
        case Decoration::ThreeLeaves:
            edges.emplace_back(s, next_free++);
            edges.emplace_back(s, next_free++);
            edges.emplace_back(s, next_free++);
            return;
        case Decoration::Star3: chain = 1; star_leaves = 2; break;
        case Decoration::Chain1Star4: chain = 2; star_leaves = 2; break;
        case Decoration::Chain2Star5: chain = 3; star_leaves = 2; break;
        case Decoration::Chain3Star6: chain = 4; star_leaves = 2; break;
    }
    int prev = s;
    for (int i = 0; i < chain; ++i) {
        edges.emplace_back(prev, next_free);
        prev = next_free++;
    }
    for (int i = 0; i < star_leaves; ++i) edges.emplace_back(prev, next_free++);
}

/// Decorated path as a marker tree: vertex 0 and 1 are the markers, spine is
/// 2 .. len+1. Returns the graph; the signature follows via extended_outcome.
inline Graph decorated_path(const std::vector<Decoration>& decs) {
    int len = int(decs.size());
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 2);
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(2 + i, 3 + i);
    edges.emplace_back(1, len + 1);
    int next_free = len + 2;
    for (int i = 0; i < len; ++i) grow_decoration(decs[i], 2 + i, next_free, edges);
    return Graph::from_edges(next_free, edges);
}

inline std::string decorated_path_signature(const std::vector<Decoration>& decs) {
    Graph h = decorated_path(decs);
    return extended_outcome(h, 0, 1, 2, int(decs.size()) + 1).encode();
}

}  // namespace detail

class PathCatalog {
public:
    struct Entry {
        int length = 0;
        std::vector<Decoration> decorations;
        int total_vertices = 0;
    };

    int l_max = 0;
    std::map<std::string, Entry> entries;

    const Entry* find(const std::string& sig) const {
        auto it = entries.find(sig);
        return it == entries.end() ? nullptr : &it->second;
    }

    /// Shortest-first, lexicographically-least-first enumeration of
    /// decorated paths. The full decoration alphabet is exhausted on short
    /// paths; longer paths fall back to leaner alphabets to keep the build
    /// bounded. Unmatched signatures simply stay unreduced later, so the
    /// budget only affects reduction strength, never soundness.
    static PathCatalog build(int l_max) {
        if (l_max < 1 || l_max > 14) throw cap_exceeded("PathCatalog: l_max out of range");
        using D = Decoration;
        const std::vector<D> full = {D::None,  D::Leaf,        D::TwoLeaves,
                                     D::ThreeLeaves, D::Star3, D::Chain1Star4,
                                     D::Chain2Star5, D::Chain3Star6};
        const std::vector<D> mid = {D::None, D::Leaf, D::TwoLeaves, D::ThreeLeaves};
        const std::vector<D> lean = {D::None, D::Leaf};

        PathCatalog cat;
        cat.l_max = l_max;
        for (int len = 1; len <= l_max; ++len) {
            const std::vector<D>& alpha = len <= 5 ? full : len <= 7 ? mid : lean;
            std::vector<size_t> idx(len, 0);
            while (true) {
                std::vector<D> decs(len);
                int extra = 0;
                for (int i = 0; i < len; ++i) {
                    decs[i] = alpha[idx[i]];
                    extra += decoration_size(decs[i]);
                }
                std::string sig = detail::decorated_path_signature(decs);
                cat.entries.try_emplace(std::move(sig),
                                        Entry{len, std::move(decs), len + extra});
                int pos = len - 1;  // counter in base |alpha|, leftmost digit first
                while (pos >= 0 && ++idx[pos] == alpha.size()) idx[pos--] = 0;
                if (pos < 0) break;
            }
        }
        return cat;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("PathCatalog: cannot write " + path);
        out << "path-catalog 1 " << l_max << '\n';
        for (const auto& [sig, e] : entries) {
            out << e.length << ' ';
            for (size_t i = 0; i < e.decorations.size(); ++i)
                out << (i ? "," : "") << int(e.decorations[i]);
            out << ' ' << sig << '\n';
        }
    }

    static std::optional<PathCatalog> load(const std::string& path, int expect_l_max) {
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::string magic;
        int version = 0, stored_l_max = 0;
        if (!(in >> magic >> version >> stored_l_max) || magic != "path-catalog" ||
            version != 1 || stored_l_max != expect_l_max)
            return std::nullopt;
        PathCatalog cat;
        cat.l_max = stored_l_max;
        int len;
        std::string decs_csv, sig;
        while (in >> len >> decs_csv >> sig) {
            Entry e;
            e.length = len;
            std::string cur;
            for (char ch : decs_csv + ",") {
                if (ch == ',') {
                    e.decorations.push_back(Decoration(std::stoi(cur)));
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            if (int(e.decorations.size()) != len) return std::nullopt;
            e.total_vertices = len;
            for (Decoration d : e.decorations) e.total_vertices += decoration_size(d);
            cat.entries.emplace(std::move(sig), std::move(e));
        }
        return cat;
    }

    /// Process-wide cache, optionally backed by a file.
    static const PathCatalog& get(const KernelOptions& opts) {
        static std::map<std::pair<int, std::string>, PathCatalog> cache;
        auto key = std::make_pair(opts.l_max, opts.catalog_path);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        if (!opts.catalog_path.empty()) {
            if (auto loaded = load(opts.catalog_path, opts.l_max))
                return cache.emplace(key, std::move(*loaded)).first->second;
        }
        PathCatalog built = build(opts.l_max);
        if (!opts.catalog_path.empty()) built.save(opts.catalog_path);
        return cache.emplace(key, std::move(built)).first->second;
    }
};

// ---------------------------------------------------------------------------
// The four rules
// ---------------------------------------------------------------------------

namespace detail {

/// Rebuilds the instance graph on the surviving vertices plus freshly
/// appended replacement structure. `extra_edges` refer to new vertices by
/// index >= keep.count() after the reindexing of `keep`.
inline void splice(KernelInstance& inst, const VertexSubset& keep, int extra_vertices,
                   const std::vector<std::pair<int, int>>& extra_edges_new,
                   const std::vector<std::pair<int, int>>& bridge_edges_old_new) {
    InducedGraph base = induced_subgraph(inst.graph, keep);
    int base_n = base.graph.vertex_count();
    auto edges = base.graph.edges();
    for (auto [a, b] : extra_edges_new) edges.emplace_back(base_n + a, base_n + b);
    for (auto [old_v, new_v] : bridge_edges_old_new)
        edges.emplace_back(base.new_of[old_v], base_n + new_v);
    inst.graph = Graph::from_edges(base_n + extra_vertices, edges);
}

}  // namespace detail

/// Rule 1: every vertex keeps at most 3 pendant leaves; surplus leaves are
/// deleted (largest indices first).
inline bool rule1_trim_leaves(KernelInstance& inst) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    VertexSubset keep = VertexSubset::all(n);
    int removed = 0;
    for (int v = 0; v < n; ++v) {
        int kept_leaves = 0;
        for (int w : g.neighbors(v)) {
            if (g.degree(w) != 1) continue;
            if (++kept_leaves > 3) {
                keep.reset(w);
                ++removed;
            }
        }
    }
    if (removed == 0) return false;
    inst.graph = induced_subgraph(g, keep).graph;
    inst.trace.push_back("rule1: removed " + std::to_string(removed) + " surplus leaves");
    return true;
}

/// Rule 2: while two legal moves entirely outside the 2-core can be played
/// back to back, play them (lexicographically smallest first). Removing two
/// plies at a time keeps the player to move unchanged.
inline bool rule2_pair_tree_moves(KernelInstance& inst) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    CoreDecomposition dec = two_core(g);
    if (dec.core.empty()) return false;

    auto tree_edges = [&](const VertexSubset& alive) {
        std::vector<std::pair<int, int>> out;
        for (int u = alive.first(); u != -1; u = alive.next(u)) {
            if (dec.core.test(u)) continue;
            for (int w : g.neighbors(u))
                if (w > u && alive.test(w) && !dec.core.test(w)) out.emplace_back(u, w);
        }
        return out;
    };

    VertexSubset alive = VertexSubset::all(n);
    int pairs = 0;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (auto [u, v] : tree_edges(alive)) {
            if (!detail::ndak_legal(g, alive, u, v)) continue;
            VertexSubset after = alive;
            after.reset(u);
            after.reset(v);
            for (auto [x, y] : tree_edges(after)) {
                if (!detail::ndak_legal(g, after, x, y)) continue;
                after.reset(x);
                after.reset(y);
                alive = after;
                ++pairs;
                progressed = true;
                break;
            }
            if (progressed) break;
        }
    }
    if (pairs == 0) return false;
    inst.graph = induced_subgraph(g, alive).graph;
    inst.trace.push_back("rule2: played " + std::to_string(pairs) + " move pairs (" +
                         std::to_string(4 * pairs) + " vertices)");
    return true;
}

/// Rule 3: the forest hanging below a core vertex is replaced by the minimal
/// catalog tree with the same signature — directly when it contains no legal
/// move, or with a pendant 2-path re-attached when it contains exactly one.
/// Applies the first strictly shrinking replacement found.
inline bool rule3_replace_forests(KernelInstance& inst) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    CoreDecomposition dec = two_core(g);
    if (dec.core.empty()) return false;
    VertexSubset all = VertexSubset::all(n);

    for (int u = dec.core.first(); u != -1; u = dec.core.next(u)) {
        VertexSubset forest(n);
        for (const HangingTree& ht : dec.hanging_trees)
            if (ht.core_root == u) forest |= ht.tree;
        if (forest.empty()) continue;

        std::vector<std::pair<int, int>> internal_moves;
        for (int x = forest.first(); x != -1; x = forest.next(x))
            for (int w : g.neighbors(x))
                if (w > x && forest.test(w) && detail::ndak_legal(g, all, x, w))
                    internal_moves.emplace_back(x, w);
        if (internal_moves.size() > 1) continue;  // rule 2 has not finished here

        VertexSubset tu = forest;
        tu.set(u);
        std::vector<std::pair<int, int>> extra_edges, bridges;
        int added = 0;
        if (internal_moves.empty()) {
            const detail::CatalogTree& ct = detail::catalog_tree_for(tree_signature(g, tu, u));
            added = ct.tree.vertex_count() - 1;
            if (added >= forest.count()) continue;
            for (auto [a, b] : ct.tree.edges()) {
                if (a == 0)
                    bridges.emplace_back(u, b - 1);
                else
                    extra_edges.emplace_back(a - 1, b - 1);
            }
        } else {
            auto [mx, my] = internal_moves.front();
            VertexSubset rest = tu;
            rest.reset(mx);
            rest.reset(my);
            if (rest.count() < 2) continue;  // forest was just the move pair
            const detail::CatalogTree& ct = detail::catalog_tree_for(tree_signature(g, rest, u));
            int leaf = detail::smallest_nonroot_leaf(ct.tree);
            added = ct.tree.vertex_count() - 1 + 2;
            if (added >= forest.count()) continue;
            for (auto [a, b] : ct.tree.edges()) {
                if (a == 0)
                    bridges.emplace_back(u, b - 1);
                else
                    extra_edges.emplace_back(a - 1, b - 1);
            }
            // pendant 2-path restoring the single pending move
            int p1 = ct.tree.vertex_count() - 1, p2 = p1 + 1;
            extra_edges.emplace_back(leaf - 1, p1);
            extra_edges.emplace_back(p1, p2);
        }
        detail::splice(inst, all - forest, added, extra_edges, bridges);
        inst.trace.push_back("rule3: forest of " + std::to_string(forest.count()) +
                             " at a core vertex replaced by " + std::to_string(added) +
                             " vertices");
        return true;
    }
    return false;
}

namespace detail {

struct Segment {
    int a = -1, b = -1;          // boundary vertices (members of S)
    std::vector<int> spine;      // interior core vertices, from a to b
    VertexSubset body;           // spine plus all hanging decorations
    std::string sig;
    int total = 0;
};

/// Core vertices that bound segments: core degree >= 3, or a hanging forest
/// that still contains a legal move.
inline VertexSubset branch_set(const Graph& g, const CoreDecomposition& dec) {
    int n = g.vertex_count();
    VertexSubset all = VertexSubset::all(n);
    std::vector<VertexSubset> forest(n, VertexSubset(n));
    for (const HangingTree& ht : dec.hanging_trees)
        if (ht.core_root != -1) forest[ht.core_root] |= ht.tree;
    VertexSubset s(n);
    for (int u = dec.core.first(); u != -1; u = dec.core.next(u)) {
        int cdeg = 0;
        for (int w : g.neighbors(u))
            if (dec.core.test(w)) ++cdeg;
        bool has_move = false;
        const VertexSubset& f = forest[u];
        for (int x = f.first(); x != -1 && !has_move; x = f.next(x))
            for (int w : g.neighbors(x))
                if (w > x && f.test(w) && ndak_legal(g, all, x, w)) {
                    has_move = true;
                    break;
                }
        if (cdeg >= 3 || has_move) s.set(u);
    }
    return s;
}

inline std::vector<Segment> find_segments(const Graph& g, const CoreDecomposition& dec,
                                          const VertexSubset& s_set) {
    int n = g.vertex_count();
    std::vector<VertexSubset> forest(n, VertexSubset(n));
    for (const HangingTree& ht : dec.hanging_trees)
        if (ht.core_root != -1) forest[ht.core_root] |= ht.tree;

    std::vector<Segment> out;
    VertexSubset visited(n);
    for (int a = s_set.first(); a != -1; a = s_set.next(a)) {
        for (int w0 : g.neighbors(a)) {
            if (!dec.core.test(w0) || s_set.test(w0) || visited.test(w0)) continue;
            Segment seg;
            seg.a = a;
            seg.body = VertexSubset(n);
            int prev = a, cur = w0;
            while (!s_set.test(cur)) {
                seg.spine.push_back(cur);
                visited.set(cur);
                seg.body.set(cur);
                seg.body |= forest[cur];
                int next = -1;
                for (int w : g.neighbors(cur))
                    if (dec.core.test(w) && w != prev) next = w;
                prev = cur;
                cur = next;
            }
            seg.b = cur;
            seg.total = seg.body.count();
            out.push_back(std::move(seg));
        }
    }
    return out;
}

/// Signature of a real segment, via the marker-tree encoding shared with the
/// catalog builder.
inline std::string segment_signature(const Graph& g, const Segment& seg) {
    std::vector<int> new_of(g.vertex_count(), -1);
    int next = 2;  // 0 and 1 are the markers
    for (int x = seg.body.first(); x != -1; x = seg.body.next(x)) new_of[x] = next++;
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, new_of[seg.spine.front()]);
    edges.emplace_back(1, new_of[seg.spine.back()]);
    for (int x = seg.body.first(); x != -1; x = seg.body.next(x))
        for (int w : g.neighbors(x))
            if (w > x && seg.body.test(w)) edges.emplace_back(new_of[x], new_of[w]);
    Graph h = Graph::from_edges(next, edges);
    return extended_outcome(h, 0, 1, new_of[seg.spine.front()], new_of[seg.spine.back()])
        .encode();
}

}  // namespace detail

/// Rule 4: each decorated core path between branch vertices is looked up in
/// the catalog by signature and replaced by the stored representative when
/// that is strictly smaller. With apply=false it only reports signatures
/// absent from the catalog.
inline bool rule4_replace_paths(KernelInstance& inst, const PathCatalog& catalog,
                                bool apply = true,
                                std::vector<std::string>* unmatched = nullptr) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    CoreDecomposition dec = two_core(g);
    if (dec.core.empty()) return false;
    VertexSubset s_set = detail::branch_set(g, dec);
    if (s_set.empty()) return false;

    for (detail::Segment& seg : detail::find_segments(g, dec, s_set)) {
        seg.sig = detail::segment_signature(g, seg);
        const PathCatalog::Entry* e = catalog.find(seg.sig);
        if (!e) {
            if (unmatched)
                unmatched->push_back("segment of " + std::to_string(seg.total) +
                                     " vertices (spine " + std::to_string(seg.spine.size()) +
                                     ") has no catalog entry");
            continue;
        }
        if (!apply || e->total_vertices >= seg.total) continue;
        if (seg.a == seg.b && e->length == 1) continue;  // would double the edge to a

        // Replacement spine occupies new indices 0..len-1; decorations after.
        std::vector<std::pair<int, int>> extra_edges;
        for (int i = 0; i + 1 < e->length; ++i) extra_edges.emplace_back(i, i + 1);
        int next_free = e->length;
        for (int i = 0; i < e->length; ++i)
            detail::grow_decoration(e->decorations[i], i, next_free, extra_edges);
        std::vector<std::pair<int, int>> bridges = {{seg.a, 0}, {seg.b, e->length - 1}};
        detail::splice(inst, VertexSubset::all(n) - seg.body, next_free, extra_edges, bridges);
        inst.trace.push_back("rule4: segment of " + std::to_string(seg.total) +
                             " vertices replaced by " + std::to_string(e->total_vertices));
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

inline KernelResult kernelize(const Graph& g, const KernelOptions& opts = {}) {
    int n = g.vertex_count();
    if (n < 1 || !is_connected(g, VertexSubset::all(n)))
        throw precondition_error("kernelize: input must be connected and non-empty");

    KernelResult res;
    res.report.original_n = n;
    res.report.original_m = g.edge_count();
    res.report.fen = feedback_edge_number(g);
    res.instance.graph = g;

    if (is_tree(g)) {
        auto [o, moves] = tree_outcome(g);
        res.instance.resolved = o;
        res.instance.graph = Graph::from_edges(0, {});
        res.instance.trace.push_back("tree input resolved directly (" +
                                     std::to_string(moves) + " moves)");
        res.report.outcome = o;
        res.report.final_n = 0;
        res.report.final_m = 0;
        res.report.branch_vertices = 0;
        return res;
    }

    const PathCatalog* catalog = opts.use_rule4 ? &PathCatalog::get(opts) : nullptr;
    auto run_counted = [&](const char* name, auto&& rule) {
        int before = res.instance.graph.vertex_count();
        bool changed = rule();
        if (changed) {
            int delta = before - res.instance.graph.vertex_count();
            res.report.rule_deltas.emplace_back(name, delta);
        }
        return changed;
    };
    while (true) {
        if (run_counted("rule1", [&] { return rule1_trim_leaves(res.instance); })) continue;
        if (run_counted("rule2", [&] { return rule2_pair_tree_moves(res.instance); })) continue;
        if (run_counted("rule3", [&] { return rule3_replace_forests(res.instance); })) continue;
        if (catalog &&
            run_counted("rule4", [&] { return rule4_replace_paths(res.instance, *catalog); }))
            continue;
        break;
    }
    if (catalog)
        rule4_replace_paths(res.instance, *catalog, /*apply=*/false,
                            &res.report.unmatched_segments);

    const Graph& k = res.instance.graph;
    res.report.final_n = k.vertex_count();
    res.report.final_m = k.edge_count();
    CoreDecomposition dec = two_core(k);
    int branches = 0;
    for (int u = dec.core.first(); u != -1; u = dec.core.next(u)) {
        int cdeg = 0;
        for (int w : k.neighbors(u))
            if (dec.core.test(w)) ++cdeg;
        if (cdeg >= 3) ++branches;
    }
    res.report.branch_vertices = branches;
    res.report.branch_bound_ok = branches <= std::max(0, 2 * res.report.fen - 2);
    if (res.instance.to_move_parity != 0)
        throw std::logic_error("kernelize: player to move drifted");
    return res;
}

}  // namespace vdg
