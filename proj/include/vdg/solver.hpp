#pragma once

#include <unordered_map>

#include "vdg/generate.hpp"
#include "vdg/rulesets.hpp"

namespace vdg {

enum class Outcome { N, P };

inline const char* to_string(Outcome o) { return o == Outcome::N ? "N" : "P"; }

/// Smallest non-negative integer absent from the values.
inline int mex(const std::vector<int>& values) {
    std::vector<char> present(values.size() + 1, 0);
    for (int v : values)
        if (v >= 0 && v <= int(values.size())) present[v] = 1;
    int m = 0;
    while (present[m]) ++m;
    return m;
}

struct SolveReport {
    Outcome outcome = Outcome::P;
    std::optional<int> grundy;
    std::optional<Move> best_move;
    uint64_t nodes_expanded = 0;
    uint64_t table_entries = 0;
};

struct SolveOptions {
    bool use_orbits = true;
    bool use_table = true;
    int vertex_cap = 63;
};

/// Exact solver over alive-subset positions of a fixed host graph. The
/// transposition key is the alive bit vector alone; deletion-only games make
/// it a complete position descriptor.
class Solver {
public:
    Solver(const Ruleset& rs, const Graph& g, SolveOptions opt = {})
        : rs_(rs), g_(g), opt_(opt) {}

    SolveReport solve_outcome(const VertexSubset& alive) {
        check_cap();
        SolveReport rep;
        rep.outcome = outcome_rec(alive) ? Outcome::N : Outcome::P;
        if (rep.outcome == Outcome::N) {
            for (auto& m : candidate_moves(alive)) {
                if (!outcome_rec(alive - m.removed)) {
                    rep.best_move = m;  // moves are subset-lex sorted already
                    break;
                }
            }
        }
        rep.nodes_expanded = nodes_;
        rep.table_entries = outcome_tab_.size() + grundy_tab_.size();
        return rep;
    }

    SolveReport solve_grundy(const VertexSubset& alive) {
        check_cap();
        SolveReport rep;
        int gv = grundy_rec(alive);
        rep.grundy = gv;
        rep.outcome = gv != 0 ? Outcome::N : Outcome::P;
        if (rep.outcome == Outcome::N) {
            for (auto& m : candidate_moves(alive)) {
                if (grundy_rec(alive - m.removed) == 0) {
                    rep.best_move = m;
                    break;
                }
            }
        }
        rep.nodes_expanded = nodes_;
        rep.table_entries = outcome_tab_.size() + grundy_tab_.size();
        return rep;
    }

private:
    void check_cap() const {
        if (g_.vertex_count() > opt_.vertex_cap)
            throw cap_exceeded("solver: graph exceeds vertex cap of " +
                               std::to_string(opt_.vertex_cap));
    }

    std::vector<Move> candidate_moves(const VertexSubset& alive) const {
        return opt_.use_orbits ? move_orbits(rs_, g_, alive) : legal_moves(rs_, g_, alive);
    }

    bool outcome_rec(const VertexSubset& alive) {
        if (opt_.use_table) {
            auto it = outcome_tab_.find(alive);
            if (it != outcome_tab_.end()) return it->second;
        }
        ++nodes_;
        bool win = false;
        for (auto& m : candidate_moves(alive)) {
            if (!outcome_rec(alive - m.removed)) {
                win = true;
                break;  // first P-option suffices
            }
        }
        if (opt_.use_table) outcome_tab_.emplace(alive, win);
        return win;
    }

    /// Grundy value; for games that may disconnect, the value of a
    /// disconnected position is the XOR over its components.
    int grundy_rec(const VertexSubset& alive) {
        if (rs_.may_disconnect()) {
            auto comps = connected_components(g_, alive);
            if (comps.size() != 1) {
                int acc = 0;
                for (auto& c : comps) acc ^= grundy_component(c);
                return acc;
            }
            return grundy_component(alive);
        }
        return grundy_component(alive);
    }

    int grundy_component(const VertexSubset& alive) {
        if (opt_.use_table) {
            auto it = grundy_tab_.find(alive);
            if (it != grundy_tab_.end()) return it->second;
        }
        ++nodes_;
        std::vector<int> opts;
        for (auto& m : candidate_moves(alive)) opts.push_back(grundy_rec(alive - m.removed));
        int gv = mex(opts);
        if (opt_.use_table) grundy_tab_.emplace(alive, gv);
        return gv;
    }

    Ruleset rs_;
    const Graph& g_;
    SolveOptions opt_;
    uint64_t nodes_ = 0;
    std::unordered_map<VertexSubset, bool, SubsetHash> outcome_tab_;
    std::unordered_map<VertexSubset, int, SubsetHash> grundy_tab_;
};

inline SolveReport solve_outcome(const Ruleset& rs, const Graph& g, const VertexSubset& alive,
                                 SolveOptions opt = {}) {
    return Solver(rs, g, opt).solve_outcome(alive);
}
inline SolveReport solve_outcome(const Ruleset& rs, const Graph& g, SolveOptions opt = {}) {
    return solve_outcome(rs, g, VertexSubset::all(g.vertex_count()), opt);
}

inline SolveReport solve_grundy(const Ruleset& rs, const Graph& g, const VertexSubset& alive,
                                SolveOptions opt = {}) {
    return Solver(rs, g, opt).solve_grundy(alive);
}
inline SolveReport solve_grundy(const Ruleset& rs, const Graph& g, SolveOptions opt = {}) {
    return solve_grundy(rs, g, VertexSubset::all(g.vertex_count()), opt);
}

enum class SequenceFamily { Path, Cycle };

/// Grundy values for the family members n = 1..n_max, each solved
/// independently. Paths and cycles stay tractable past the generic 63-vertex
/// cap because their components are intervals.
inline std::vector<int> grundy_sequence(const Ruleset& rs, SequenceFamily family, int n_max) {
    if (n_max < 1 || n_max > 140) throw cap_exceeded("grundy_sequence: n_max out of range");
    std::vector<int> out;
    for (int n = 1; n <= n_max; ++n) {
        if (family == SequenceFamily::Cycle && n < 3) {
            out.push_back(0);  // C_1, C_2 are not simple graphs; report 0 placeholders
            continue;
        }
        Graph g = family == SequenceFamily::Path ? make_path(n) : make_cycle(n);
        SolveOptions opt;
        opt.vertex_cap = 140;
        out.push_back(*solve_grundy(rs, g, opt).grundy);
    }
    return out;
}

struct Periodicity {
    int preperiod = 0;
    int period = 0;
};

/// Smallest (preperiod p, period d) in lexicographic order such that
/// seq[i] = seq[i+d] holds from i = p to the end, with the matched window at
/// least 2d long.
inline std::optional<Periodicity> detect_period(const std::vector<int>& seq) {
    int len = int(seq.size());
    for (int p = 0; p < len; ++p) {
        for (int d = 1; p + 2 * d <= len; ++d) {
            bool ok = true;
            for (int i = p; i + d < len && ok; ++i)
                if (seq[i] != seq[i + d]) ok = false;
            if (ok) return Periodicity{p, d};
        }
    }
    return std::nullopt;
}

/// Heap Grundy values of the plain subtraction game on S.
inline int subtraction_heap_grundy(const std::vector<int>& S, int m) {
    if (S.empty()) throw precondition_error("subtraction_heap_grundy: empty set");
    if (m < 0) throw precondition_error("subtraction_heap_grundy: negative heap");
    std::vector<int> g(m + 1, 0);
    for (int h = 0; h <= m; ++h) {
        std::vector<int> opts;
        for (int k : S)
            if (k >= 1 && k <= h) opts.push_back(g[h - k]);
        g[h] = mex(opts);
    }
    return g[m];
}

}  // namespace vdg
