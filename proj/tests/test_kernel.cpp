#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "vdg/generate.hpp"
#include "vdg/kernel.hpp"
#include "vdg/solver.hpp"

using namespace vdg;

namespace {

KernelOptions small_opts() {
    KernelOptions o;
    o.l_max = 8;
    return o;
}

Outcome kernel_outcome(const KernelResult& res) {
    if (res.report.outcome) return *res.report.outcome;
    Outcome o = solve_outcome(Ruleset::ndak(), res.instance.graph).outcome;
    if (res.instance.to_move_parity % 2 == 1) o = o == Outcome::N ? Outcome::P : Outcome::N;
    return o;
}

}  // namespace

TEST_CASE("tree signatures of the catalog shapes") {
    // path on 3 rooted at the middle: N with the root, disconnected without
    Graph p3 = make_path(3);
    TreeSignature s = tree_signature(p3, VertexSubset::all(3), 1);
    CHECK(s.with_root == Outcome::N);
    CHECK(s.without_root == RootRemovedClass::Disconnected);
    // path on 4 rooted at an end: P with the root, N without (P3 remains)
    Graph p4 = make_path(4);
    s = tree_signature(p4, VertexSubset::all(4), 0);
    CHECK(s.with_root == Outcome::P);
    CHECK(s.without_root == RootRemovedClass::N);
    CHECK_THROWS_AS(tree_signature(p4, VertexSubset::of(4, {1, 2}), 0), precondition_error);
}

TEST_CASE("kernelize resolves tree inputs outright") {
    for (const Graph& t : {make_path(7), make_star(5), make_spider(2, 2, 3)}) {
        KernelResult res = kernelize(t, small_opts());
        REQUIRE(res.report.outcome.has_value());
        CHECK(*res.report.outcome == solve_outcome(Ruleset::ndak(), t).outcome);
        CHECK(res.report.final_n == 0);
    }
}

TEST_CASE("rule 1 trims excess pendant leaves") {
    // cycle vertex with five pendant leaves: leaves beyond three are dead weight
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (int i = 0; i < 5; ++i) edges.emplace_back(0, 4 + i);
    Graph g = Graph::from_edges(9, edges);
    KernelResult res = kernelize(g, small_opts());
    CHECK(res.report.final_n < 9);
    CHECK(kernel_outcome(res) == solve_outcome(Ruleset::ndak(), g).outcome);
}

TEST_CASE("kernelize preserves the outcome on a random corpus") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + int(rng() % 8);
        int extra = int(rng() % 4);
        int m = std::min(n - 1 + extra, n * (n - 1) / 2);
        Graph g = make_random_connected(n, m, rng());
        KernelResult res = kernelize(g, small_opts());
        CHECK(kernel_outcome(res) == solve_outcome(Ruleset::ndak(), g).outcome);
        CHECK(res.report.branch_bound_ok);
    }
}

TEST_CASE("kernelize is idempotent") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = make_random_connected(10, 12, rng());
        KernelResult once = kernelize(g, small_opts());
        if (once.report.final_n == 0) continue;
        KernelResult twice = kernelize(once.instance.graph, small_opts());
        CHECK(twice.report.final_n == once.report.final_n);
        CHECK(twice.report.final_m == once.report.final_m);
    }
}

TEST_CASE("extended outcome encoding is deterministic") {
    Graph p6 = make_path(6);
    ExtendedOutcome a = extended_outcome(p6, 0, 5, 1, 4);
    ExtendedOutcome b = extended_outcome(p6, 0, 5, 1, 4);
    CHECK(a.encode() == b.encode());
    // a decorated path with a different interior differs
    Graph p7 = make_path(7);
    ExtendedOutcome c = extended_outcome(p7, 0, 6, 1, 5);
    CHECK(a.encode() != c.encode());
}

TEST_CASE("path catalog build, save, load") {
    PathCatalog cat = PathCatalog::build(4);
    std::string path = std::string("/tmp/vdg_catalog_test_") + std::to_string(::getpid()) + ".txt";
    cat.save(path);
    auto loaded = PathCatalog::load(path, 4);
    REQUIRE(loaded.has_value());
    CHECK_FALSE(PathCatalog::load(path, 5).has_value());  // l_max mismatch
    std::remove(path.c_str());
    CHECK_FALSE(PathCatalog::load(path, 4).has_value());  // missing file
    CHECK_THROWS_AS(PathCatalog::build(0), cap_exceeded);
}

TEST_CASE("kernelize with a catalog file reproduces the in-memory result") {
    std::string path = std::string("/tmp/vdg_catalog_kz_") + std::to_string(::getpid()) + ".txt";
    KernelOptions with_file = small_opts();
    with_file.catalog_path = path;
    Graph g = make_random_connected(12, 14, 123);
    KernelResult a = kernelize(g, small_opts());
    KernelResult b = kernelize(g, with_file);   // builds and saves
    KernelResult c = kernelize(g, with_file);   // reloads
    CHECK(a.report.final_n == b.report.final_n);
    CHECK(b.report.final_n == c.report.final_n);
    CHECK(b.report.final_m == c.report.final_m);
    std::remove(path.c_str());
}

TEST_CASE("fixed feedback-edge-number family kernelizes to constant size") {
    auto theta = [](int l1, int l2, int l3) {
        std::vector<std::pair<int, int>> edges;
        int next = 2;
        for (int len : {l1, l2, l3}) {
            int prev = 0;
            for (int i = 0; i < len; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, 1);
        }
        edges.emplace_back(0, next++);
        edges.emplace_back(1, next++);
        return Graph::from_edges(next, edges);
    };
    KernelOptions opts;  // default l_max = 12
    KernelResult small = kernelize(theta(5, 5, 6), opts);
    KernelResult large = kernelize(theta(13, 13, 10), opts);
    CHECK(small.report.final_n == large.report.final_n);
    CHECK(small.report.unmatched_segments.empty());
    CHECK(large.report.unmatched_segments.empty());
}
