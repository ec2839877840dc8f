#include <catch2/catch_amalgamated.hpp>

#include "vdg/enumerate.hpp"
#include "vdg/generate.hpp"
#include "vdg/tractable.hpp"

using namespace vdg;

TEST_CASE("graph counts up to isomorphism") {
    CHECK(all_graphs_upto_iso(1).size() == 1);
    CHECK(all_graphs_upto_iso(2).size() == 2);
    CHECK(all_graphs_upto_iso(3).size() == 4);
    CHECK(all_graphs_upto_iso(4).size() == 11);
    CHECK(all_graphs_upto_iso(5).size() == 34);
    CHECK(connected_graphs_upto_iso(3).size() == 2);
    CHECK(connected_graphs_upto_iso(4).size() == 6);
    CHECK(connected_graphs_upto_iso(5).size() == 21);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
    auto gs = connected_graphs_upto_iso(5);
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j)
            CHECK_FALSE(find_isomorphism(gs[i], gs[j]).has_value());
}

TEST_CASE("tree counts and canonical strings") {
    std::vector<size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(all_trees_upto_iso(n).size() == counts[n - 1]);
    // canonical string separates the path from the star, and is relabel-invariant
    CHECK(tree_canonical_string(make_path(4)) != tree_canonical_string(make_star(3)));
    Graph p4r = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(tree_canonical_string(make_path(4)) == tree_canonical_string(p4r));
}

TEST_CASE("clique tree enumeration yields clique trees only") {
    auto cts = all_clique_trees_upto_iso(7);
    CHECK(cts.size() > all_trees_upto_iso(7).size());  // trees plus denser blocks
    for (const Graph& g : cts) {
        CHECK(is_clique_tree(g));
        CHECK(is_connected(g, VertexSubset::all(g.vertex_count())));
    }
    // K_4 and the triangle appear
    bool has_k4 = false, has_k3 = false;
    for (const Graph& g : cts) {
        if (g.vertex_count() == 4 && g.edge_count() == 6) has_k4 = true;
        if (g.vertex_count() == 3 && g.edge_count() == 3) has_k3 = true;
    }
    CHECK(has_k4);
    CHECK(has_k3);
}
