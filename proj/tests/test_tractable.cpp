#include <catch2/catch_amalgamated.hpp>

#include "vdg/enumerate.hpp"
#include "vdg/generate.hpp"
#include "vdg/solver.hpp"
#include "vdg/tractable.hpp"

using namespace vdg;

TEST_CASE("tree outcome on small shapes") {
    CHECK(tree_outcome(make_path(2)) == std::pair(Outcome::N, 1));
    CHECK(tree_outcome(make_path(3)) == std::pair(Outcome::N, 1));
    CHECK(tree_outcome(make_path(4)) == std::pair(Outcome::P, 2));
    // K_{1,3}: every edge has degree sum 4, no legal move
    CHECK(tree_outcome(make_star(3)) == std::pair(Outcome::P, 0));
    CHECK(tree_outcome(make_path(1)) == std::pair(Outcome::P, 0));
}

TEST_CASE("tree outcome agrees with the solver and play length is invariant") {
    std::mt19937_64 rng(23);
    for (const Graph& t : all_trees_upto_iso(8)) {
        auto [outcome, count] = tree_outcome(t);
        CHECK(outcome == solve_outcome(Ruleset::ndak(), t).outcome);
        // random maximal play always takes exactly `count` moves
        for (int trial = 0; trial < 5; ++trial) {
            VertexSubset alive = VertexSubset::all(t.vertex_count());
            int played = 0;
            while (true) {
                auto moves = legal_moves(Ruleset::ndak(), t, alive);
                if (moves.empty()) break;
                alive = alive - moves[rng() % moves.size()].removed;
                ++played;
            }
            CHECK(played == count);
        }
    }
}

TEST_CASE("clique tree recognition") {
    CHECK(is_clique_tree(make_complete(4)));
    CHECK(is_clique_tree(make_path(5)));
    CHECK(is_clique_tree(make_cycle(3)));
    CHECK_FALSE(is_clique_tree(make_cycle(4)));
    CHECK_FALSE(is_clique_tree(make_grid(2, 3)));
    CHECK_THROWS_AS(clique_tree_outcome(make_cycle(5)), precondition_error);
}

TEST_CASE("clique tree outcome on K4 and against the solver") {
    CHECK(clique_tree_outcome(make_complete(4)) == std::pair(Outcome::P, 2));
    for (const Graph& g : all_clique_trees_upto_iso(8)) {
        auto [outcome, count] = clique_tree_outcome(g);
        SolveReport rep = solve_outcome(Ruleset::ndak(), g);
        CHECK(outcome == rep.outcome);
        CHECK(((count % 2 == 1) == (outcome == Outcome::N)));
    }
}

TEST_CASE("threshold partition structure") {
    // construction word iiu: two isolated vertices then one universal -> K_{1,2}
    Graph g = make_threshold("iiu");
    ThresholdPartition tp = threshold_partition(g);
    CHECK(tp.clique_order == 1);
    CHECK(tp.stable.count() == 2);
    // K and S partition V, K is a clique, S is stable
    for (int len = 2; len <= 6; ++len) {
        for (int bits = 0; bits < (1 << len); ++bits) {
            std::string word;
            for (int i = 0; i < len; ++i) word += (bits >> i & 1) ? 'u' : 'i';
            if (word.back() != 'u') continue;  // keep it connected
            Graph h = make_threshold(word);
            ThresholdPartition p = threshold_partition(h);
            int n = h.vertex_count();
            CHECK((p.clique | p.stable) == VertexSubset::all(n));
            CHECK_FALSE(p.clique.intersects(p.stable));
            for (int u = p.clique.first(); u != -1; u = p.clique.next(u))
                for (int v = p.clique.next(u); v != -1; v = p.clique.next(v))
                    CHECK(h.has_edge(u, v));
            for (int u = p.stable.first(); u != -1; u = p.stable.next(u))
                for (int v = p.stable.next(u); v != -1; v = p.stable.next(v))
                    CHECK_FALSE(h.has_edge(u, v));
        }
    }
}

TEST_CASE("threshold outcome agrees with the solver on a small sweep") {
    int tested = 0;
    for (int len = 2; len <= 9; ++len) {
        for (int bits = 0; bits < (1 << len); ++bits) {
            std::string word;
            for (int i = 0; i < len; ++i) word += (bits >> i & 1) ? 'u' : 'i';
            if (word.back() != 'u') continue;
            Graph h = make_threshold(word);
            ThresholdPartition p = threshold_partition(h);
            if (!p.clique_twin_free || p.stable.count() < p.clique.count()) continue;
            Outcome got;
            try {
                got = threshold_outcome(h);
            } catch (const precondition_error&) {
                continue;
            }
            CHECK(got == solve_outcome(Ruleset::ndak(), h).outcome);
            ++tested;
        }
    }
    CHECK(tested > 10);
}

TEST_CASE("threshold outcome rejects unsupported inputs") {
    // K_4 alone: clique with twins
    CHECK_THROWS_AS(threshold_outcome(make_complete(4)), precondition_error);
}
