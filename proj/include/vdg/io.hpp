#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vdg/graph.hpp"

namespace vdg {

/// Edge-list format: '#' comment lines, then "n m", then m lines "u v" with
/// 0 <= u < v < n. parse_graph accepts edges in any order but rejects
/// self-loops and duplicates; write_graph emits sorted edges byte-exactly.
inline Graph parse_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    int lineno = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n == -1) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw parse_error("line " + std::to_string(lineno) + ": malformed header");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw parse_error("line " + std::to_string(lineno) + ": malformed edge");
        edges.emplace_back(u, v);
    }
    if (n == -1) throw parse_error("missing header");
    if (int(edges.size()) != m)
        throw parse_error("declared " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

/// Positive DNF formula for Avoid True: clauses are non-empty sets of
/// 0-based variable indices; a clause is satisfied when all its variables
/// are true.
struct DNFFormula {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;
};

/// DNF file format: '#' comments, "p dnf n m", then m clause lines of
/// space-separated variable indices.
inline DNFFormula parse_dnf(std::istream& in) {
    std::string line;
    int lineno = 0;
    DNFFormula f;
    int m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (m == -1) {
            std::string p, kind;
            if (!(ls >> p >> kind >> f.variable_count >> m) || p != "p" || kind != "dnf" ||
                f.variable_count < 0 || m < 0)
                throw parse_error("line " + std::to_string(lineno) + ": malformed dnf header");
            continue;
        }
        std::vector<int> clause;
        int x;
        while (ls >> x) {
            if (x < 0 || x >= f.variable_count)
                throw parse_error("line " + std::to_string(lineno) + ": variable out of range");
            clause.push_back(x);
        }
        if (clause.empty())
            throw parse_error("line " + std::to_string(lineno) + ": empty clause");
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        f.clauses.push_back(std::move(clause));
    }
    if (m == -1) throw parse_error("missing dnf header");
    if (int(f.clauses.size()) != m)
        throw parse_error("declared " + std::to_string(m) + " clauses, found " +
                          std::to_string(f.clauses.size()));
    return f;
}

inline DNFFormula parse_dnf(const std::string& text) {
    std::istringstream in(text);
    return parse_dnf(in);
}

inline void write_dnf(std::ostream& out, const DNFFormula& f) {
    out << "p dnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << '\n';
    }
}

}  // namespace vdg
