// vdg: command-line surface for the vertex-deletion-game laboratory.
//
// Subcommands: solve, sequence, kernelize, reduce, gi-gadget, symmetry,
// gen, verify.  Exit codes: 0 success, 1 usage error, 2 input error,
// 3 cap exceeded, 4 verification failure / negative verify result.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdg/enumerate.hpp"
#include "vdg/generate.hpp"
#include "vdg/graph.hpp"
#include "vdg/io.hpp"
#include "vdg/kernel.hpp"
#include "vdg/reductions.hpp"
#include "vdg/rulesets.hpp"
#include "vdg/solver.hpp"
#include "vdg/suites.hpp"
#include "vdg/symmetry.hpp"
#include "vdg/tractable.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerifyFail = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vdg::parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

vdg::Graph load_graph(const std::string& path) {
    try {
        return vdg::parse_graph(read_file(path));
    } catch (const vdg::parse_error& e) {
        throw vdg::parse_error(path + ": " + e.what());
    }
}

vdg::DNFFormula load_dnf(const std::string& path) {
    try {
        return vdg::parse_dnf(read_file(path));
    } catch (const vdg::parse_error& e) {
        throw vdg::parse_error(path + ": " + e.what());
    }
}

void write_gadget(const vdg::GadgetResult& gr, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw vdg::parse_error("cannot write " + out_path);
    vdg::write_graph(out, gr.graph);
    std::ofstream map(out_path + ".map");
    if (!map) throw vdg::parse_error("cannot write " + out_path + ".map");
    vdg::write_provenance(map, gr);
    std::cout << "wrote " << gr.graph.vertex_count() << " vertices, "
              << gr.graph.edge_count() << " edges to " << out_path << "\n"
              << "wrote provenance to " << out_path << ".map\n";
}

std::vector<int> move_vertices(const vdg::Move& m) {
    std::vector<int> vs;
    for (int v = m.removed.first(); v != -1; v = m.removed.next(v)) vs.push_back(v);
    return vs;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

int cmd_solve(const std::string& game, const std::string& input, bool grundy,
              bool fast, bool want_json) {
    vdg::Ruleset rs = vdg::Ruleset::parse(game);
    vdg::Graph g = load_graph(input);

    std::string method = "generic";
    vdg::SolveReport rep;
    bool have_report = false;

    // The fast paths are the polynomial NDAK algorithms; they produce
    // outcomes only, so --grundy always takes the generic solver.
    if (fast && !grundy && rs.name() == vdg::Ruleset::ndak().name()) {
        if (vdg::is_tree(g)) {
            rep.outcome = vdg::tree_outcome(g).first;
            method = "tree";
            have_report = true;
        } else if (vdg::is_clique_tree(g)) {
            rep.outcome = vdg::clique_tree_outcome(g).first;
            method = "clique-tree";
            have_report = true;
        } else {
            try {
                rep.outcome = vdg::threshold_outcome(g);
                method = "threshold";
                have_report = true;
            } catch (const vdg::precondition_error&) {
                // not a supported threshold graph; fall through
            }
        }
    }
    if (!have_report)
        rep = grundy ? vdg::solve_grundy(rs, g) : vdg::solve_outcome(rs, g);

    if (want_json) {
        json j;
        j["schema"] = "vdg.solve/1";
        j["game"] = rs.name();
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["method"] = method;
        j["outcome"] = vdg::to_string(rep.outcome);
        j["grundy"] = rep.grundy ? json(*rep.grundy) : json(nullptr);
        j["best_move"] = rep.best_move ? json(move_vertices(*rep.best_move)) : json(nullptr);
        j["nodes_expanded"] = rep.nodes_expanded;
        j["table_entries"] = rep.table_entries;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "outcome: " << vdg::to_string(rep.outcome) << "\n";
    if (rep.grundy) std::cout << "grundy: " << *rep.grundy << "\n";
    if (rep.best_move) {
        std::cout << "best move:";
        for (int v : move_vertices(*rep.best_move)) std::cout << " " << v;
        std::cout << "\n";
    }
    if (method != "generic") std::cout << "method: " << method << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sequence
// ---------------------------------------------------------------------------

int cmd_sequence(const std::string& game, const std::string& family, int max_n,
                 bool detect) {
    vdg::Ruleset rs = vdg::Ruleset::parse(game);
    vdg::SequenceFamily fam;
    if (family == "path")
        fam = vdg::SequenceFamily::Path;
    else if (family == "cycle")
        fam = vdg::SequenceFamily::Cycle;
    else
        throw vdg::parse_error("family must be path or cycle");
    std::vector<int> seq = vdg::grundy_sequence(rs, fam, max_n);
    for (int n = 1; n <= max_n; ++n) std::cout << n << " " << seq[n - 1] << "\n";
    if (detect) {
        auto p = vdg::detect_period(seq);
        if (p) {
            std::cout << "period: " << p->period << "\n"
                      << "preperiod: " << p->preperiod << "\n";
        } else {
            std::cout << "period: none detected within " << max_n << " terms\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// kernelize
// ---------------------------------------------------------------------------

int cmd_kernelize(const std::string& input, const std::string& catalog, int lmax,
                  bool want_json) {
    vdg::Graph g = load_graph(input);
    vdg::KernelOptions opts;
    opts.l_max = lmax;
    opts.catalog_path = catalog;
    vdg::KernelResult res = vdg::kernelize(g, opts);
    const vdg::KernelReport& r = res.report;

    if (want_json) {
        json j;
        j["schema"] = "vdg.kernelize/1";
        j["original_n"] = r.original_n;
        j["original_m"] = r.original_m;
        j["final_n"] = r.final_n;
        j["final_m"] = r.final_m;
        j["fen"] = r.fen;
        j["branch_vertices"] = r.branch_vertices;
        j["branch_bound_ok"] = r.branch_bound_ok;
        json deltas = json::array();
        for (const auto& [rule, removed] : r.rule_deltas)
            deltas.push_back({{"rule", rule}, {"vertices_removed", removed}});
        j["rule_deltas"] = deltas;
        j["outcome"] = r.outcome ? json(vdg::to_string(*r.outcome)) : json(nullptr);
        j["unmatched_segments"] = r.unmatched_segments;
        json edges = json::array();
        for (auto [u, v] : res.instance.graph.edges()) edges.push_back({u, v});
        j["kernel_edges"] = edges;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "original: n=" << r.original_n << " m=" << r.original_m
              << " fen=" << r.fen << "\n";
    for (const auto& [rule, removed] : r.rule_deltas)
        std::cout << rule << ": removed " << removed << " vertices\n";
    std::cout << "kernel: n=" << r.final_n << " m=" << r.final_m << "\n";
    std::cout << "branch vertices: " << r.branch_vertices
              << (r.branch_bound_ok ? " (within bound)" : " (BOUND EXCEEDED)") << "\n";
    if (r.outcome) std::cout << "outcome: " << vdg::to_string(*r.outcome) << "\n";
    for (const auto& s : r.unmatched_segments)
        std::cout << "unmatched segment: " << s << "\n";
    if (r.final_n > 0) {
        std::cout << "kernel graph:\n";
        vdg::write_graph(std::cout, res.instance.graph);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// reduce / gi-gadget
// ---------------------------------------------------------------------------

int cmd_reduce(const std::string& from, const std::string& input,
               const std::string& set_str, int k, int girth_target,
               const std::string& output) {
    vdg::GadgetResult gr;
    if (from == "node-kayles") {
        if (set_str.empty())
            throw CLI::ValidationError("--set is required with --from node-kayles");
        std::vector<int> S;
        std::stringstream ss(set_str);
        std::string tok;
        while (std::getline(ss, tok, ','))
            S.push_back(std::stoi(tok));
        vdg::Graph g = load_graph(input);
        std::optional<int> tg;
        if (girth_target > 0) tg = girth_target;
        gr = vdg::nk_to_csg(g, S, tg);
    } else if (from == "avoid-true") {
        if (k < 2) throw CLI::ValidationError("--k (>= 2) is required with --from avoid-true");
        vdg::DNFFormula f = load_dnf(input);
        gr = vdg::avoidtrue_to_csgk(f, k);
    } else {
        throw CLI::ValidationError("--from must be node-kayles or avoid-true");
    }
    write_gadget(gr, output);
    return kExitOk;
}

int cmd_gi_gadget(const std::string& g1_path, const std::string& g2_path,
                  const std::string& output) {
    vdg::Graph g1 = load_graph(g1_path);
    vdg::Graph g2 = load_graph(g2_path);
    write_gadget(vdg::gi_gadget(g1, g2), output);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// symmetry / gen / verify
// ---------------------------------------------------------------------------

int cmd_symmetry(const std::string& input, int cap) {
    vdg::Graph g = load_graph(input);
    auto f = vdg::find_edge_disjoint_involution(g, cap);
    if (!f) {
        std::cout << "no edge-disjoint involution\n";
        return kExitVerifyFail;
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u <= f->mapping[u]) std::cout << u << " <-> " << f->mapping[u] << "\n";
    return kExitOk;
}

int cmd_gen(std::string family, const std::string& output, uint64_t seed,
            bool seed_given) {
    // A literal "$seed" in the family spec is replaced by --seed, so random
    // families can be driven from the flag:  --family random_connected:10,14,$seed
    auto pos = family.find("$seed");
    if (pos != std::string::npos) {
        if (!seed_given) throw CLI::ValidationError("family spec uses $seed but --seed not given");
        family.replace(pos, 5, std::to_string(seed));
    }
    vdg::Graph g = vdg::generate(family);
    std::ofstream out(output);
    if (!out) throw vdg::parse_error("cannot write " + output);
    vdg::write_graph(out, g);
    std::cout << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges to " << output << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    std::vector<vdg::SuiteResult> results = vdg::run_suite(suite, seed);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        for (const auto& l : r.lines) std::cout << "  " << l << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "suite passed" : "suite FAILED") << "\n";
    return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-deletion game solver and transformation laboratory"};
    app.require_subcommand(1);

    // solve
    std::string s_game, s_input;
    bool s_grundy = false, s_fast = false, s_json = false;
    auto* solve = app.add_subcommand("solve", "solve a position from an edge-list file");
    solve->add_option("--game", s_game, "ruleset: arc-kayles | node-kayles | nd-node-kayles | csg:2 | csg:2,3")->required();
    solve->add_option("--input", s_input, "graph file")->required();
    solve->add_flag("--grundy", s_grundy, "compute the Grundy value as well");
    solve->add_flag("--fast", s_fast, "try the polynomial tree / clique-tree / threshold algorithms first");
    solve->add_flag("--json", s_json, "machine-readable output");

    // sequence
    std::string q_game, q_family;
    int q_max_n = 0;
    bool q_detect = false;
    auto* sequence = app.add_subcommand("sequence", "Grundy sequence over a graph family");
    sequence->add_option("--game", q_game, "ruleset")->required();
    sequence->add_option("--family", q_family, "path | cycle")->required();
    sequence->add_option("--max-n", q_max_n, "largest n")->required()->check(CLI::PositiveNumber);
    sequence->add_flag("--detect-period", q_detect, "report eventual period and preperiod");

    // kernelize
    std::string k_input, k_catalog;
    int k_lmax = 12;
    bool k_json = false;
    auto* kernelize = app.add_subcommand("kernelize", "apply the reduction rules for the non-disconnecting game");
    kernelize->add_option("--input", k_input, "graph file")->required();
    kernelize->add_option("--catalog", k_catalog, "path-catalog persistence file");
    kernelize->add_option("--lmax", k_lmax, "longest catalog path length")->check(CLI::PositiveNumber);
    kernelize->add_flag("--json", k_json, "machine-readable output");

    // reduce
    std::string r_from, r_input, r_set, r_output;
    int r_k = 0, r_girth = 0;
    auto* reduce = app.add_subcommand("reduce", "gadget reductions between games");
    reduce->add_option("--from", r_from, "node-kayles | avoid-true")->required();
    reduce->add_option("--input", r_input, "graph file (node-kayles) or DNF file (avoid-true)")->required();
    reduce->add_option("--set", r_set, "comma-separated subtraction set, e.g. 2,3");
    reduce->add_option("--k", r_k, "subtraction value k for the split-graph gadget");
    reduce->add_option("--girth", r_girth, "even girth target for the node-kayles gadget");
    reduce->add_option("--output", r_output, "output graph file (provenance goes to FILE.map)")->required();

    // gi-gadget
    std::string gi_g1, gi_g2, gi_output;
    auto* gig = app.add_subcommand("gi-gadget", "graph isomorphism to edge-disjoint involution");
    gig->add_option("--g1", gi_g1, "first graph file")->required();
    gig->add_option("--g2", gi_g2, "second graph file")->required();
    gig->add_option("--output", gi_output, "output graph file")->required();

    // symmetry
    std::string y_input;
    int y_cap = 64;
    auto* symmetry = app.add_subcommand("symmetry", "search for an edge-disjoint involution");
    symmetry->add_option("--input", y_input, "graph file")->required();
    symmetry->add_option("--cap", y_cap, "vertex-count cap for the search")->check(CLI::PositiveNumber);

    // gen
    std::string g_family, g_output;
    uint64_t g_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a graph family instance");
    gen->add_option("--family", g_family, "family spec, e.g. path:6, grid:4,4, random_connected:10,14,$seed")->required();
    gen->add_option("--output", g_output, "output graph file")->required();
    auto* seed_opt = gen->add_option("--seed", g_seed, "seed substituted for $seed in the spec");

    // verify
    std::string v_suite;
    uint64_t v_seed = 0;
    auto* verify = app.add_subcommand("verify", "run a named acceptance suite");
    std::string suite_help = "one of:";
    for (const auto& n : vdg::suite_names()) suite_help += " " + n;
    verify->add_option("--suite", v_suite, suite_help)->required();
    verify->add_option("--seed", v_seed, "seed for the randomized corpora");

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return cmd_solve(s_game, s_input, s_grundy, s_fast, s_json);
        if (sequence->parsed())
            return cmd_sequence(q_game, q_family, q_max_n, q_detect);
        if (kernelize->parsed())
            return cmd_kernelize(k_input, k_catalog, k_lmax, k_json);
        if (reduce->parsed())
            return cmd_reduce(r_from, r_input, r_set, r_k, r_girth, r_output);
        if (gig->parsed())
            return cmd_gi_gadget(gi_g1, gi_g2, gi_output);
        if (symmetry->parsed())
            return cmd_symmetry(y_input, y_cap);
        if (gen->parsed())
            return cmd_gen(g_family, g_output, g_seed, seed_opt->count() > 0);
        if (verify->parsed())
            return cmd_verify(v_suite, v_seed);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const vdg::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const vdg::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const vdg::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
