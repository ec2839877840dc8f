#include <catch2/catch_amalgamated.hpp>

#include "vdg/generate.hpp"
#include "vdg/graph.hpp"
#include "vdg/io.hpp"

using namespace vdg;

TEST_CASE("VertexSubset basics") {
    VertexSubset s = VertexSubset::of(10, {1, 4, 9});
    CHECK(s.count() == 3);
    CHECK(s.test(4));
    CHECK_FALSE(s.test(0));
    CHECK(s.first() == 1);
    CHECK(s.next(1) == 4);
    CHECK(s.next(9) == -1);
    s.reset(4);
    CHECK(s.to_vector() == std::vector<int>{1, 9});

    VertexSubset a = VertexSubset::of(6, {0, 1, 2});
    VertexSubset b = VertexSubset::of(6, {2, 3});
    CHECK((a & b) == VertexSubset::of(6, {2}));
    CHECK((a | b) == VertexSubset::of(6, {0, 1, 2, 3}));
    CHECK((a - b) == VertexSubset::of(6, {0, 1}));
    CHECK(a.intersects(b));
    CHECK(VertexSubset::of(6, {2}).subset_of(b));
    CHECK(VertexSubset::all(4).count() == 4);
    CHECK(VertexSubset::none(4).empty());
}

TEST_CASE("Graph construction validates input") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), parse_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), parse_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), parse_error);
    Graph g = Graph::from_edges(4, {{2, 1}, {0, 1}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
}

TEST_CASE("connected components are ordered by smallest vertex") {
    Graph g = Graph::from_edges(6, {{4, 5}, {0, 1}});
    auto comps = connected_components(g, VertexSubset::all(6));
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == VertexSubset::of(6, {0, 1}));
    CHECK(comps[1] == VertexSubset::of(6, {2}));
    CHECK(comps[2] == VertexSubset::of(6, {3}));
    CHECK(comps[3] == VertexSubset::of(6, {4, 5}));
    CHECK(is_connected(g, VertexSubset::none(6)));  // empty subset counts as connected
    CHECK_FALSE(is_connected(g, VertexSubset::all(6)));
}

TEST_CASE("two_core splits lollipop into core and hanging tree") {
    // triangle 0-1-2 with a tail 2-3-4
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    CoreDecomposition cd = two_core(g);
    CHECK(cd.core == VertexSubset::of(5, {0, 1, 2}));
    REQUIRE(cd.hanging_trees.size() == 1);
    CHECK(cd.hanging_trees[0].core_root == 2);
    CHECK(cd.hanging_trees[0].tree_attach == 3);
    CHECK(cd.hanging_trees[0].tree == VertexSubset::of(5, {3, 4}));
}

TEST_CASE("two_core of a tree is empty with one hanging tree") {
    Graph g = make_path(5);
    CoreDecomposition cd = two_core(g);
    CHECK(cd.core.empty());
    REQUIRE(cd.hanging_trees.size() == 1);
    CHECK(cd.hanging_trees[0].core_root == -1);
    CHECK(cd.hanging_trees[0].tree == VertexSubset::all(5));
}

TEST_CASE("two_core is invariant under edge insertion order") {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 2}, {1, 5}};
    std::mt19937_64 rng(99);
    CoreDecomposition ref = two_core(Graph::from_edges(6, edges));
    for (int t = 0; t < 10; ++t) {
        std::shuffle(edges.begin(), edges.end(), rng);
        CoreDecomposition cd = two_core(Graph::from_edges(6, edges));
        CHECK(cd.core == ref.core);
        CHECK(cd.hanging_trees.size() == ref.hanging_trees.size());
    }
}

TEST_CASE("feedback edge number and girth") {
    CHECK(feedback_edge_number(make_path(7)) == 0);
    CHECK(feedback_edge_number(make_cycle(6)) == 1);
    // theta graph: two vertices joined by three disjoint paths
    Graph theta = Graph::from_edges(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    CHECK(feedback_edge_number(theta) == 2);
    CHECK(girth(theta) == 4);
    CHECK(girth(make_cycle(5)) == 5);
    CHECK(girth(make_complete(4)) == 3);
    CHECK(girth(make_path(4)) == kInfiniteGirth);
    CHECK(is_tree(make_star(3)));
    CHECK_FALSE(is_tree(make_cycle(3)));
    CHECK_FALSE(is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));  // disconnected forest
}

TEST_CASE("induced subgraph keeps adjacency and records the mapping") {
    Graph g = make_cycle(6);
    InducedGraph ig = induced_subgraph(g, VertexSubset::of(6, {1, 2, 3, 5}));
    CHECK(ig.graph.vertex_count() == 4);
    CHECK(ig.graph.edge_count() == 2);  // 1-2 and 2-3 survive
    CHECK(ig.old_of[ig.new_of[2]] == 2);
    CHECK(ig.graph.has_edge(ig.new_of[1], ig.new_of[2]));
    CHECK_FALSE(ig.graph.has_edge(ig.new_of[3], ig.new_of[5]));
}

TEST_CASE("twin classes on a star") {
    Graph g = make_star(3);  // center 0, leaves 1..3
    TwinPartition tp = twin_classes(g, VertexSubset::all(4));
    REQUIRE(tp.classes.size() == 2);
    std::vector<size_t> sizes = {tp.classes[0].size(), tp.classes[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 3});
    CHECK(tp.class_of[1] == tp.class_of[2]);
    CHECK(tp.class_of[0] != tp.class_of[1]);
}

TEST_CASE("find_isomorphism positive and negative") {
    Graph p4 = make_path(4);
    Graph p4r = Graph::from_edges(4, {{3, 1}, {1, 0}, {0, 2}});
    auto iso = find_isomorphism(p4, p4r);
    REQUIRE(iso.has_value());
    for (auto [u, v] : p4.edges()) CHECK(p4r.has_edge((*iso)[u], (*iso)[v]));
    CHECK_FALSE(find_isomorphism(p4, make_star(3)).has_value());
    CHECK_THROWS_AS(find_isomorphism(make_path(13), make_path(13)), cap_exceeded);
}

TEST_CASE("graph file round trip and parse errors") {
    Graph g = make_spider(2, 3, 1);
    Graph h = parse_graph(graph_to_string(g));
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(u, v));

    CHECK_THROWS_AS(parse_graph("oops"), parse_error);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), parse_error);      // edge count mismatch
    CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), parse_error);      // out of range
    CHECK_THROWS_AS(parse_graph(""), parse_error);                // missing header
}

TEST_CASE("DNF file round trip") {
    DNFFormula f;
    f.variable_count = 4;
    f.clauses = {{0, 2}, {1, 2, 3}};
    std::ostringstream out;
    write_dnf(out, f);
    DNFFormula g = parse_dnf(out.str());
    CHECK(g.variable_count == 4);
    CHECK(g.clauses == f.clauses);
    CHECK_THROWS_AS(parse_dnf("p dnf 2 1\n5\n"), parse_error);
    CHECK_THROWS_AS(parse_dnf("p dnf 2 1\n\n"), parse_error);
}

TEST_CASE("generators produce the advertised shapes") {
    CHECK(make_grid(2, 3).edge_count() == 7);
    CHECK(make_complete(5).edge_count() == 10);
    CHECK(make_star(4).vertex_count() == 5);
    Graph rc = make_random_connected(9, 12, 5);
    CHECK(rc.vertex_count() == 9);
    CHECK(rc.edge_count() == 12);
    CHECK(is_connected(rc, VertexSubset::all(9)));
    // determinism of seeded generation
    CHECK(graph_to_string(make_random_connected(9, 12, 5)) == graph_to_string(rc));
    CHECK(graph_to_string(generate("grid:2,3")) == graph_to_string(make_grid(2, 3)));
    CHECK_THROWS_AS(generate("nosuch:3"), precondition_error);
}
