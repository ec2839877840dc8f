#include <catch2/catch_amalgamated.hpp>

#include "vdg/generate.hpp"
#include "vdg/solver.hpp"
#include "vdg/symmetry.hpp"

using namespace vdg;

TEST_CASE("even cycles admit edge-disjoint involutions") {
    for (int n : {4, 6, 8}) {
        Graph g = make_cycle(n);
        auto f = find_edge_disjoint_involution(g);
        REQUIRE(f.has_value());
        CHECK(is_edge_disjoint_involution(g, *f));
        CHECK(solve_outcome(Ruleset::arc_kayles(), g).outcome == Outcome::P);
    }
}

TEST_CASE("paths and odd cycles admit none") {
    CHECK_FALSE(find_edge_disjoint_involution(make_path(4)).has_value());
    CHECK_FALSE(find_edge_disjoint_involution(make_cycle(5)).has_value());
    CHECK_FALSE(find_edge_disjoint_involution(make_complete(3)).has_value());
}

TEST_CASE("explicit involution on C6 verifies; shifted one does not") {
    Graph c6 = make_cycle(6);
    Involution good{{3, 4, 5, 0, 1, 2}};  // antipodal map
    CHECK(is_edge_disjoint_involution(c6, good));
    Involution reflection{{0, 5, 4, 3, 2, 1}};  // fixes vertices 0 and 3
    CHECK_FALSE(is_edge_disjoint_involution(c6, reflection));
    Involution not_inv{{1, 2, 3, 4, 5, 0}};  // rotation, not an involution
    CHECK_FALSE(is_edge_disjoint_involution(c6, not_inv));
}

TEST_CASE("mirror strategy wins on symmetric graphs") {
    for (int n : {6, 8}) {
        Graph g = make_cycle(n);
        auto f = find_edge_disjoint_involution(g);
        REQUIRE(f.has_value());
        CHECK(verify_symmetry_strategy(g, *f));
    }
    Graph c6 = make_cycle(6);
    CHECK_THROWS_AS(verify_symmetry_strategy(c6, Involution{{0, 5, 4, 3, 2, 1}}),
                    precondition_error);
}

TEST_CASE("symmetry does not transfer to the non-disconnecting game") {
    // C6 is symmetric yet first-player-winning under the non-disconnecting rules
    CHECK(solve_outcome(Ruleset::ndak(), make_cycle(6)).outcome == Outcome::N);
}

TEST_CASE("search cap") {
    CHECK_THROWS_AS(find_edge_disjoint_involution(make_cycle(30), 24), cap_exceeded);
    CHECK(find_edge_disjoint_involution(make_cycle(30), 32).has_value());
}
