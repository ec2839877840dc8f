#pragma once

#include <map>

#include "vdg/graph.hpp"

namespace vdg {

/// Move law of one vertex-deletion game. NDAK (Non-Disconnecting Arc-Kayles)
/// is csg({2}).
struct Ruleset {
    enum class Kind { ArcKayles, NodeKayles, NdNodeKayles, Csg };
    Kind kind = Kind::ArcKayles;
    std::vector<int> subtraction;  // sorted, non-empty, all >= 1; Csg only

    static Ruleset arc_kayles() { return {Kind::ArcKayles, {}}; }
    static Ruleset node_kayles() { return {Kind::NodeKayles, {}}; }
    static Ruleset nd_node_kayles() { return {Kind::NdNodeKayles, {}}; }
    static Ruleset csg(std::vector<int> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty() || s.front() < 1)
            throw precondition_error("csg: subtraction set must be non-empty integers >= 1");
        return {Kind::Csg, std::move(s)};
    }
    static Ruleset ndak() { return csg({2}); }

    /// True for games whose positions may fall apart into components.
    bool may_disconnect() const { return kind == Kind::ArcKayles || kind == Kind::NodeKayles; }

    /// CLI syntax: "arc-kayles", "node-kayles", "nd-node-kayles", "csg:2,3".
    static Ruleset parse(const std::string& s) {
        if (s == "arc-kayles") return arc_kayles();
        if (s == "node-kayles") return node_kayles();
        if (s == "nd-node-kayles") return nd_node_kayles();
        if (s.rfind("csg:", 0) == 0) {
            std::vector<int> set;
            std::string cur;
            for (char ch : s.substr(4) + ",") {
                if (ch == ',') {
                    if (cur.empty()) throw parse_error("csg: empty element in set");
                    set.push_back(std::stoi(cur));
                    cur.clear();
                } else if (ch >= '0' && ch <= '9') {
                    cur += ch;
                } else {
                    throw parse_error("csg: bad subtraction set syntax");
                }
            }
            return csg(std::move(set));
        }
        throw parse_error("unknown ruleset: " + s);
    }

    std::string name() const {
        switch (kind) {
            case Kind::ArcKayles: return "arc-kayles";
            case Kind::NodeKayles: return "node-kayles";
            case Kind::NdNodeKayles: return "nd-node-kayles";
            case Kind::Csg: {
                std::string s = "csg:";
                for (size_t i = 0; i < subtraction.size(); ++i)
                    s += (i ? "," : "") + std::to_string(subtraction[i]);
                return s;
            }
        }
        return "?";
    }

    bool operator==(const Ruleset& o) const {
        return kind == o.kind && subtraction == o.subtraction;
    }
};

struct Move {
    VertexSubset removed;
    bool operator==(const Move& o) const { return removed == o.removed; }
};

namespace detail {

/// Enumerate connected subsets of size k containing `anchor`, using only
/// alive vertices > anchor besides the anchor itself. Classic grow-or-ban
/// recursion: take the head of the extension list (then extend it with fresh
/// neighbors) or ban it for the rest of the branch, so each subset appears
/// exactly once.
inline void connected_subsets_grow(const Graph& g, const VertexSubset& alive, int anchor, int k,
                                   VertexSubset& in_cur, int cur_size,
                                   std::vector<int> ext, VertexSubset banned,
                                   std::vector<VertexSubset>& out) {
    if (cur_size == k) {
        out.push_back(in_cur);
        return;
    }
    while (!ext.empty()) {
        int v = ext.front();
        ext.erase(ext.begin());
        std::vector<int> ext2 = ext;
        for (int w : g.neighbors(v))
            if (w > anchor && alive.test(w) && !in_cur.test(w) && !banned.test(w) &&
                std::find(ext2.begin(), ext2.end(), w) == ext2.end())
                ext2.push_back(w);
        in_cur.set(v);
        connected_subsets_grow(g, alive, anchor, k, in_cur, cur_size + 1, std::move(ext2),
                               banned, out);
        in_cur.reset(v);
        banned.set(v);
    }
}

inline std::vector<VertexSubset> connected_subsets(const Graph& g, const VertexSubset& alive,
                                                   int k) {
    std::vector<VertexSubset> out;
    if (k < 1) return out;
    for (int a = alive.first(); a != -1; a = alive.next(a)) {
        VertexSubset in_cur(g.vertex_count());
        in_cur.set(a);
        if (k == 1) {
            out.push_back(in_cur);
            continue;
        }
        std::vector<int> ext;
        for (int w : g.neighbors(a))
            if (w > a && alive.test(w)) ext.push_back(w);
        connected_subsets_grow(g, alive, a, k, in_cur, 1, std::move(ext),
                               VertexSubset(g.vertex_count()), out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// All legal moves in deterministic (subset-lexicographic) order. An empty
/// list means the position is terminal.
inline std::vector<Move> legal_moves(const Ruleset& rs, const Graph& g,
                                     const VertexSubset& alive) {
    std::vector<Move> out;
    switch (rs.kind) {
        case Ruleset::Kind::ArcKayles: {
            for (int u = alive.first(); u != -1; u = alive.next(u))
                for (int v : g.neighbors(u))
                    if (v > u && alive.test(v)) {
                        Move m{VertexSubset(g.vertex_count())};
                        m.removed.set(u);
                        m.removed.set(v);
                        out.push_back(std::move(m));
                    }
            break;
        }
        case Ruleset::Kind::NodeKayles:
        case Ruleset::Kind::NdNodeKayles: {
            std::vector<VertexSubset> seen;
            for (int v = alive.first(); v != -1; v = alive.next(v)) {
                VertexSubset rm(g.vertex_count());
                rm.set(v);
                for (int w : g.neighbors(v))
                    if (alive.test(w)) rm.set(w);
                if (std::find(seen.begin(), seen.end(), rm) != seen.end()) continue;
                seen.push_back(rm);
                if (rs.kind == Ruleset::Kind::NdNodeKayles && !is_connected(g, alive - rm))
                    continue;
                out.push_back(Move{std::move(rm)});
            }
            std::sort(out.begin(), out.end(),
                      [](const Move& a, const Move& b) { return a.removed < b.removed; });
            break;
        }
        case Ruleset::Kind::Csg: {
            for (int k : rs.subtraction)
                for (auto& w : detail::connected_subsets(g, alive, k))
                    if (is_connected(g, alive - w)) out.push_back(Move{w});
            std::sort(out.begin(), out.end(),
                      [](const Move& a, const Move& b) { return a.removed < b.removed; });
            break;
        }
    }
    return out;
}

/// Applies a move after re-validating its legality clause by clause.
inline VertexSubset apply_move(const Ruleset& rs, const Graph& g, const VertexSubset& alive,
                               const Move& m) {
    if (m.removed.empty()) throw precondition_error("illegal move: removed set is empty");
    if (!m.removed.subset_of(alive))
        throw precondition_error("illegal move: removed set not within alive vertices");
    switch (rs.kind) {
        case Ruleset::Kind::ArcKayles: {
            auto vs = m.removed.to_vector();
            if (vs.size() != 2 || !g.has_edge(vs[0], vs[1]))
                throw precondition_error("illegal move: arc-kayles requires one alive edge");
            break;
        }
        case Ruleset::Kind::NodeKayles:
        case Ruleset::Kind::NdNodeKayles: {
            bool matches = false;
            for (int v = m.removed.first(); v != -1 && !matches; v = m.removed.next(v)) {
                VertexSubset rm(g.vertex_count());
                rm.set(v);
                for (int w : g.neighbors(v))
                    if (alive.test(w)) rm.set(w);
                matches = rm == m.removed;
            }
            if (!matches)
                throw precondition_error(
                    "illegal move: not a closed neighborhood of an alive vertex");
            if (rs.kind == Ruleset::Kind::NdNodeKayles && !is_connected(g, alive - m.removed))
                throw precondition_error("illegal move: residue disconnected");
            break;
        }
        case Ruleset::Kind::Csg: {
            int k = m.removed.count();
            if (std::find(rs.subtraction.begin(), rs.subtraction.end(), k) ==
                rs.subtraction.end())
                throw precondition_error("illegal move: removed size not in subtraction set");
            if (!is_connected(g, m.removed))
                throw precondition_error("illegal move: removed set not connected");
            if (!is_connected(g, alive - m.removed))
                throw precondition_error("illegal move: residue disconnected");
            break;
        }
    }
    return alive - m.removed;
}

/// One representative per orbit of legal moves under the twin partition
/// (twin substitution yields isomorphic residues, so orbits share outcomes).
inline std::vector<Move> move_orbits(const Ruleset& rs, const Graph& g,
                                     const VertexSubset& alive) {
    auto moves = legal_moves(rs, g, alive);
    if (moves.size() <= 1) return moves;
    TwinPartition tp = twin_classes(g, alive);
    std::map<std::vector<int>, Move> reps;
    for (auto& m : moves) {
        std::vector<int> key;
        for (int v = m.removed.first(); v != -1; v = m.removed.next(v))
            key.push_back(tp.class_of[v]);
        std::sort(key.begin(), key.end());
        reps.try_emplace(std::move(key), m);  // first in lex order wins
    }
    std::vector<Move> out;
    for (auto& [k, m] : reps) out.push_back(m);
    std::sort(out.begin(), out.end(),
              [](const Move& a, const Move& b) { return a.removed < b.removed; });
    return out;
}

}  // namespace vdg
