#include <catch2/catch_amalgamated.hpp>

#include "vdg/enumerate.hpp"
#include "vdg/generate.hpp"
#include "vdg/solver.hpp"

using namespace vdg;

TEST_CASE("mex") {
    CHECK(mex({}) == 0);
    CHECK(mex({1, 2}) == 0);
    CHECK(mex({0, 1, 3}) == 2);
    CHECK(mex({3, 0, 1, 2}) == 4);
}

TEST_CASE("arc-kayles path values match the heap recursion") {
    // independent octal-0.07 recursion: g(h) = mex{ g(a) xor g(b) : a+b = h-2 }
    std::vector<int> heap{0, 0};
    for (int h = 2; h <= 12; ++h) {
        std::vector<int> opts;
        for (int a = 0; a + 2 <= h; ++a) opts.push_back(heap[a] ^ heap[h - 2 - a]);
        heap.push_back(mex(opts));
    }
    for (int n = 1; n <= 12; ++n) {
        auto rep = solve_grundy(Ruleset::arc_kayles(), make_path(n));
        REQUIRE(rep.grundy.has_value());
        CHECK(*rep.grundy == heap[n]);
    }
    CHECK(*solve_grundy(Ruleset::arc_kayles(), make_path(5)).grundy == 0);
}

TEST_CASE("component xor for disconnecting games") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = make_random_connected(3 + int(rng() % 2), 3, rng());
        Graph b = make_random_connected(4, 4, rng());
        // disjoint union
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : a.edges()) edges.emplace_back(u, v);
        int off = a.vertex_count();
        for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
        Graph un = Graph::from_edges(off + b.vertex_count(), edges);
        for (const Ruleset& rs : {Ruleset::arc_kayles(), Ruleset::node_kayles()}) {
            int ga = *solve_grundy(rs, a).grundy;
            int gb = *solve_grundy(rs, b).grundy;
            CHECK(*solve_grundy(rs, un).grundy == (ga ^ gb));
        }
    }
}

TEST_CASE("transposition table and orbit pruning do not change answers") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_graphs_upto_iso(n)) {
            for (const Ruleset& rs :
                 {Ruleset::arc_kayles(), Ruleset::node_kayles(), Ruleset::ndak()}) {
                SolveReport ref = solve_grundy(rs, g);
                for (bool orbits : {false, true}) {
                    for (bool table : {false, true}) {
                        SolveOptions opt;
                        opt.use_orbits = orbits;
                        opt.use_table = table;
                        SolveReport got = solve_grundy(rs, g, opt);
                        CHECK(got.outcome == ref.outcome);
                        CHECK(*got.grundy == *ref.grundy);
                    }
                }
            }
        }
    }
}

TEST_CASE("best move is a winning move") {
    for (const Graph& g : connected_graphs_upto_iso(5)) {
        SolveReport rep = solve_outcome(Ruleset::arc_kayles(), g);
        if (rep.outcome == Outcome::N) {
            REQUIRE(rep.best_move.has_value());
            VertexSubset after = VertexSubset::all(5) - rep.best_move->removed;
            CHECK(solve_outcome(Ruleset::arc_kayles(), g, after).outcome == Outcome::P);
        } else {
            CHECK_FALSE(rep.best_move.has_value());
        }
    }
}

TEST_CASE("vertex cap is enforced") {
    SolveOptions opt;
    opt.vertex_cap = 5;
    CHECK_THROWS_AS(solve_outcome(Ruleset::arc_kayles(), make_path(6), opt), cap_exceeded);
}

TEST_CASE("grundy sequence matches per-instance solves") {
    std::vector<int> seq = grundy_sequence(Ruleset::arc_kayles(), SequenceFamily::Path, 10);
    REQUIRE(seq.size() == 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(seq[n - 1] == *solve_grundy(Ruleset::arc_kayles(), make_path(n)).grundy);
    std::vector<int> cyc = grundy_sequence(Ruleset::arc_kayles(), SequenceFamily::Cycle, 8);
    for (int n = 3; n <= 8; ++n)
        CHECK(cyc[n - 1] == *solve_grundy(Ruleset::arc_kayles(), make_cycle(n)).grundy);
}

TEST_CASE("detect_period finds the least (preperiod, period)") {
    CHECK_FALSE(detect_period({0}).has_value());
    auto p = detect_period({0, 1, 0, 1, 0, 1});
    REQUIRE(p.has_value());
    CHECK(p->preperiod == 0);
    CHECK(p->period == 2);
    p = detect_period({7, 3, 3, 3, 3});
    REQUIRE(p.has_value());
    CHECK(p->preperiod == 1);
    CHECK(p->period == 1);
    CHECK_FALSE(detect_period({0, 1, 2, 3, 4, 5}).has_value());
}

TEST_CASE("subtraction heap grundy for {1,2} has period 3") {
    for (int m = 0; m <= 20; ++m)
        CHECK(subtraction_heap_grundy({1, 2}, m) == m % 3);
    CHECK(subtraction_heap_grundy({2}, 5) == 0);  // 5 = 2+2+1: values 0,0,1,1,0,0
}
