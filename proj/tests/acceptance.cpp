// Acceptance gate: runs every verification suite and prints one line per
// criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <vector>

#include "vdg/suites.hpp"

using namespace vdg;

namespace {

struct Criterion {
    int number;
    const char* title;
    std::vector<SuiteResult> (*run)();
};

std::string summarize(const std::vector<SuiteResult>& results) {
    std::string s;
    for (const auto& r : results) {
        for (const auto& l : r.lines) {
            if (!s.empty()) s += "; ";
            s += l;
        }
    }
    return s;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "path Grundy periodicity (period 34, preperiod <= 68)",
         [] { return std::vector{check_path_periodicity()}; }},
        {2, "Cram grid outcomes (2x2, 2x3, 2x4, 2x5, 4x4)",
         [] { return std::vector{check_cram_grids()}; }},
        {3, "Node-Kayles -> CSG(S) equivalence with girth/bipartite checks",
         [] { return std::vector{check_nk_to_csg()}; }},
        {4, "Node-Kayles -> non-disconnecting Node-Kayles gadget equivalence",
         [] { return std::vector{check_ndnk_gadget()}; }},
        {5, "Avoid-True -> CSG({k}) split-gadget equivalence",
         [] { return std::vector{check_avoidtrue_gadget(42)}; }},
        {6, "kernel safety: each rule and the pipeline preserve the outcome",
         [] { return std::vector{check_kernel_safety(7)}; }},
        {7, "kernel boundedness at fixed feedback edge number",
         [] { return std::vector{check_kernel_boundedness()}; }},
        {8, "strategy-freeness on trees and clique trees",
         [] { return std::vector{check_trees(), check_clique_trees(11)}; }},
        {9, "threshold-graph theorem, exhaustive |K| in [1,7]",
         [] { return std::vector{check_threshold()}; }},
        {10, "edge-disjoint involutions force outcome P (Arc-Kayles)",
         [] { return std::vector{check_symmetry()}; }},
        {11, "graph isomorphism <-> involution on the pairing gadget",
         [] { return std::vector{check_gi_gadget()}; }},
        {12, "CSG({1}) outcome equals vertex-count parity",
         [] { return std::vector{check_csg1_parity(5)}; }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<SuiteResult> results;
        bool pass = true;
        std::string detail;
        try {
            results = c.run();
            for (const auto& r : results) pass = pass && r.pass;
            detail = summarize(results);
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "criterion " << c.number << ": " << (pass ? "pass" : "FAIL") << " — "
                  << c.title << " (" << ms << " ms)";
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n";
        if (!pass) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all 12 criteria passed\n";
    return 0;
}
