#include <catch2/catch_amalgamated.hpp>

#include "vdg/enumerate.hpp"
#include "vdg/generate.hpp"
#include "vdg/rulesets.hpp"

using namespace vdg;

TEST_CASE("ruleset parse and name round trip") {
    for (const char* s : {"arc-kayles", "node-kayles", "nd-node-kayles", "csg:2", "csg:2,3"})
        CHECK(Ruleset::parse(s).name() == s);
    CHECK(Ruleset::ndak().name() == "csg:2");
    CHECK_THROWS_AS(Ruleset::parse("kayles"), parse_error);
    CHECK_THROWS_AS(Ruleset::parse("csg:"), parse_error);
    CHECK_THROWS_AS(Ruleset::parse("csg:2,,3"), parse_error);
    CHECK(Ruleset::arc_kayles().may_disconnect());
    CHECK(Ruleset::node_kayles().may_disconnect());
    CHECK_FALSE(Ruleset::nd_node_kayles().may_disconnect());
    CHECK_FALSE(Ruleset::csg({2, 3}).may_disconnect());
}

TEST_CASE("connected subsets of K4") {
    Graph g = make_complete(4);
    VertexSubset all = VertexSubset::all(4);
    CHECK(detail::connected_subsets(g, all, 1).size() == 4);
    CHECK(detail::connected_subsets(g, all, 2).size() == 6);
    CHECK(detail::connected_subsets(g, all, 3).size() == 4);
    // every reported subset is connected and of the right size
    for (const auto& s : detail::connected_subsets(g, all, 3)) {
        CHECK(s.count() == 3);
        CHECK(is_connected(g, s));
    }
}

TEST_CASE("arc-kayles moves are edges") {
    Graph p3 = make_path(3);
    auto moves = legal_moves(Ruleset::arc_kayles(), p3, VertexSubset::all(3));
    REQUIRE(moves.size() == 2);
    CHECK(moves[0].removed == VertexSubset::of(3, {0, 1}));
    CHECK(moves[1].removed == VertexSubset::of(3, {1, 2}));
}

TEST_CASE("node-kayles deduplicates equal closed neighborhoods") {
    // K_2: both vertices have closed neighborhood {0,1}
    Graph k2 = make_complete(2);
    CHECK(legal_moves(Ruleset::node_kayles(), k2, VertexSubset::all(2)).size() == 1);
    // P_3: N[0] = {0,1}, N[1] = {0,1,2}, N[2] = {1,2}
    Graph p3 = make_path(3);
    CHECK(legal_moves(Ruleset::node_kayles(), p3, VertexSubset::all(3)).size() == 3);
}

TEST_CASE("non-disconnecting games filter by residual connectivity") {
    Graph p4 = make_path(4);
    auto moves = legal_moves(Ruleset::ndak(), p4, VertexSubset::all(4));
    // only the two pendant edges are legal; removing the middle edge strands both ends
    REQUIRE(moves.size() == 2);
    for (const auto& m : moves) CHECK(is_connected(p4, VertexSubset::all(4) - m.removed));

    Graph tri = make_cycle(3);
    // remove any 2-subset (3 ways) or the whole triangle (1 way)
    CHECK(legal_moves(Ruleset::csg({2, 3}), tri, VertexSubset::all(3)).size() == 4);
}

TEST_CASE("csg legality property on all connected graphs up to 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : connected_graphs_upto_iso(n)) {
            VertexSubset all = VertexSubset::all(n);
            for (const auto& m : legal_moves(Ruleset::csg({2, 3}), g, all)) {
                CHECK((m.removed.count() == 2 || m.removed.count() == 3));
                CHECK(is_connected(g, m.removed));
                CHECK(is_connected(g, all - m.removed));
            }
        }
    }
}

TEST_CASE("apply_move validates and reports what is wrong") {
    Graph p4 = make_path(4);
    VertexSubset all = VertexSubset::all(4);
    VertexSubset after = apply_move(Ruleset::ndak(), p4, all, {VertexSubset::of(4, {0, 1})});
    CHECK(after == VertexSubset::of(4, {2, 3}));
    // disconnecting move is rejected
    CHECK_THROWS_AS(apply_move(Ruleset::ndak(), p4, all, {VertexSubset::of(4, {1, 2})}),
                    precondition_error);
    // wrong size
    CHECK_THROWS_AS(apply_move(Ruleset::ndak(), p4, all, {VertexSubset::of(4, {0})}),
                    precondition_error);
    // dead vertex
    CHECK_THROWS_AS(apply_move(Ruleset::ndak(), p4, VertexSubset::of(4, {2, 3}),
                               {VertexSubset::of(4, {0, 1})}),
                    precondition_error);
    // non-adjacent pair under arc-kayles
    CHECK_THROWS_AS(apply_move(Ruleset::arc_kayles(), p4, all, {VertexSubset::of(4, {0, 2})}),
                    precondition_error);
}

TEST_CASE("move orbits are a subset of the legal moves") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_graphs_upto_iso(n)) {
            VertexSubset all = VertexSubset::all(n);
            for (const Ruleset& rs :
                 {Ruleset::arc_kayles(), Ruleset::node_kayles(), Ruleset::ndak()}) {
                auto moves = legal_moves(rs, g, all);
                auto orbits = move_orbits(rs, g, all);
                CHECK(orbits.size() <= moves.size());
                for (const auto& o : orbits)
                    CHECK(std::find(moves.begin(), moves.end(), o) != moves.end());
            }
        }
    }
}
