#include <algorithm>

#include "doctest.h"
#include "planarrep/gen.hpp"
#include "planarrep/represent.hpp"
#include "planarrep/verify.hpp"

using namespace planarrep;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// decomposition of a path: vertex bags {v} joined through edge bags {v, v+1}
TreeDecomposition path_treedec(int n) {
    Graph g = path_graph(n);
    return bodlaender_decomposition(g, maximal_spanning_forest(g));
}

LayerPartition one_layer(int n) {
    LayerPartition lp;
    lp.layers.emplace_back();
    for (VertexId v = 0; v < n; ++v) lp.layers[0].push_back(v);
    return lp;
}

LayerPartition singleton_layers(int n) {
    LayerPartition lp;
    for (VertexId v = 0; v < n; ++v) lp.layers.push_back({v});
    return lp;
}

}  // namespace

TEST_SUITE_BEGIN("representation");

TEST_CASE("chordal factor of a single bag is complete") {
    TreeDecomposition td;
    td.tree = Graph(1);
    td.bags = {{0, 1, 2}};
    td.origin.resize(1);
    Graph g2 = chordal_from_subtrees(td);
    CHECK(g2.vertex_count() == 3);
    CHECK(g2.edge_count() == 3);
}

TEST_CASE("chordal factor of a path decomposition is the path") {
    TreeDecomposition td = path_treedec(3);
    Graph g2 = chordal_from_subtrees(td);
    CHECK(g2.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("chordal factor demands connected subtrees") {
    TreeDecomposition td;
    td.tree = path_graph(3);
    td.bags = {{0}, {1}, {0}};  // vertex 0 sits at both ends but not the middle
    td.origin.resize(3);
    CHECK_THROWS_AS(chordal_from_subtrees(td), precondition_error);

    TreeDecomposition mismatched;
    mismatched.tree = Graph(2);
    mismatched.bags = {{0}};
    mismatched.origin.resize(1);
    CHECK_THROWS_AS(chordal_from_subtrees(mismatched), structural_error);
}

TEST_CASE("subtree model lists the nodes per vertex") {
    TreeDecomposition td = path_treedec(3);
    SubtreeModel m = subtree_model(td, 3);
    REQUIRE(m.nodes_of_vertex.size() == 3);
    // vertex 1 sits in its own node and both edge nodes
    CHECK(m.nodes_of_vertex[1] == std::vector<int>{1, 3, 4});
    CHECK(m.nodes_of_vertex[0] == std::vector<int>{0, 3});
}

TEST_CASE("t_star is the largest per-layer clique of the chordal factor") {
    TreeDecomposition path_td = path_treedec(3);
    CHECK(compute_t_star(path_td, singleton_layers(3)) == 1);
    CHECK(compute_t_star(path_td, one_layer(3)) == 2);

    TreeDecomposition k4_td;
    k4_td.tree = Graph(1);
    k4_td.bags = {{0, 1, 2, 3}};
    k4_td.origin.resize(1);
    CHECK(compute_t_star(k4_td, one_layer(4)) == 4);
}

TEST_CASE("layer coloring partitions into independent sets") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    auto classes = layer_coloring(k3, {0, 1, 2}, 3);
    REQUIRE(classes.size() == 3);
    for (const auto& c : classes) CHECK(c.size() == 1);

    Graph edgeless(3);
    auto single = layer_coloring(edgeless, {0, 1, 2}, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<VertexId>{0, 1, 2});

    auto p3 = layer_coloring(path_graph(3), {0, 1, 2}, 2);
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == std::vector<VertexId>{0, 2});
    CHECK(p3[1] == std::vector<VertexId>{1});

    CHECK_THROWS_AS(layer_coloring(k3, {0, 1, 2}, 2), invariant_breach);
    CHECK_THROWS_AS(layer_coloring(k3, {0, 7, 2}, 3), precondition_error);
    CHECK_THROWS_AS(layer_coloring(k3, {0, 0, 2}, 3), precondition_error);
}

TEST_CASE("build_g1 pads every layer to the same block count") {
    Graph g(3);  // edgeless host: one class per layer suffices
    auto lp = one_layer(3);
    std::vector<std::vector<std::vector<VertexId>>> colorings = {{{0, 1, 2}}};
    OrderedCliqueCover cover = build_g1(g, lp, colorings, 3);
    REQUIRE(cover.blocks.size() == 3);
    CHECK(cover.blocks[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(cover.blocks[1].empty());
    CHECK(cover.blocks[2].empty());
    // the class became a clique of the host copy
    CHECK(cover.host.edge_count() == 3);
}

TEST_CASE("build_g1 rejects malformed colorings") {
    Graph g = path_graph(3);
    auto lp = one_layer(3);
    std::vector<std::vector<std::vector<VertexId>>> doubled = {{{0, 2}, {1, 2}}};
    CHECK_THROWS_AS(build_g1(g, lp, doubled, 2), precondition_error);
    std::vector<std::vector<std::vector<VertexId>>> missing = {{{0, 2}}};
    CHECK_THROWS_AS(build_g1(g, lp, missing, 2), precondition_error);
    std::vector<std::vector<std::vector<VertexId>>> crowded = {{{0, 2}, {1}}};
    CHECK_THROWS_AS(build_g1(g, lp, crowded, 1), precondition_error);
    CHECK_THROWS_AS(build_g1(g, lp, {}, 2), precondition_error);
}

TEST_CASE("universal construction on a one-layer path") {
    Graph g = path_graph(3);
    RepresentationPair pair = universal_representation(g, path_treedec(3), one_layer(3));
    CHECK(pair.t_star == 2);
    CHECK(pair.g2.edges() == g.edges());
    // the independent ends get clique-ified, so g1 is a triangle
    CHECK(pair.g1.edge_count() == 3);
    REQUIRE(pair.cover.blocks.size() == 2);
    CHECK(pair.cover.blocks[0] == std::vector<VertexId>{0, 2});
    CHECK(pair.cover.blocks[1] == std::vector<VertexId>{1});
    CHECK(cover_width(pair.cover) == 1);
    CHECK(pair.report.all_pass());
    CHECK(intersection_equals(g, {pair.g1, pair.g2}).pass);
}

TEST_CASE("universal construction on a single clique bag") {
    Graph g(4);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) g.add_edge(u, v);
    TreeDecomposition td;
    td.tree = Graph(1);
    td.bags = {{0, 1, 2, 3}};
    td.origin.resize(1);
    RepresentationPair pair = universal_representation(g, td, one_layer(4));
    CHECK(pair.t_star == 4);
    CHECK(pair.report.cover_width == 3);
    CHECK(pair.report.bound == 7);
    CHECK(pair.report.all_pass());
}

TEST_CASE("universal construction validates its inputs") {
    Graph g = path_graph(3);
    CHECK_THROWS_AS(universal_representation(Graph(), path_treedec(3), one_layer(3)),
                    parameter_error);

    TreeDecomposition bad = path_treedec(3);
    bad.bags[0] = {};
    bad.bags[3] = {1};  // vertex 0 no longer appears in any bag
    CHECK_THROWS_AS(universal_representation(g, bad, one_layer(3)), precondition_error);

    LayerPartition skipping;
    skipping.layers = {{0}, {2}, {1}};  // edge 0-1 would span layers 1 and 3
    CHECK_THROWS_AS(universal_representation(g, path_treedec(3), skipping), precondition_error);
}

TEST_CASE("planar pipeline on fixtures") {
    for (const char* name : {"cycle:5", "nested_cycles:3,4", "wheel:6", "grid:3,4"}) {
        CAPTURE(name);
        EmbeddedGraph eg = fixture(parse_fixture(name));
        RepresentationPair pair = planar_representation(eg);
        CHECK(pair.report.all_pass());
        CHECK(pair.t_star <= 4);
        CHECK(pair.report.cover_width <= 7);
        CHECK(intersection_equals(eg.graph, {pair.g1, pair.g2}).pass);
        CHECK(is_chordal(pair.g2).chordal);
    }
}

TEST_CASE("planar pipeline on a random graph") {
    EmbeddedGraph eg = random_planar({20, 606, 0.85});
    PlanarRunTrace trace;
    RepresentationPair pair = planar_representation(eg, &trace);
    CHECK(pair.report.all_pass());
    CHECK(pair.report.cover_width <= 7);

    // trace sanity: the expansion stays within the recorded budgets
    CHECK(trace.expanded_layers.depth() == pair.layers.depth());
    CHECK(trace.expanded_td.node_count() > 0);
    for (const auto& s : trace.steps) {
        CHECK(s.max_er_increment <= 2);
        CHECK(s.max_vr_increment <= 3);
        CHECK(s.max_degree <= 3);
    }
    for (const auto& path : trace.map.forward) CHECK(!path.empty());
}

TEST_CASE("planar pipeline keeps original layer structure") {
    EmbeddedGraph eg = fixture({FixtureKind::nested_cycles, 2, 4});
    PeelResult peel = peel_layers(eg);
    RepresentationPair pair = planar_representation(eg);
    CHECK(pair.layers.layers == peel.layers.layers);
}

TEST_SUITE_END();
