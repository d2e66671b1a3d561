#include <algorithm>

#include "doctest.h"
#include "planarrep/graph.hpp"

using namespace planarrep;

namespace {

EmbeddedGraph triangle() {
    EmbeddedGraph eg;
    eg.graph = Graph(3);
    eg.graph.add_edge(0, 1);
    eg.graph.add_edge(0, 2);
    eg.graph.add_edge(1, 2);
    eg.rotation = {{1, 2}, {2, 0}, {0, 1}};
    eg.outer = {{0, 1}};
    return eg;
}

EmbeddedGraph k4_wheel() {
    // rim 0,1,2 around hub 3
    EmbeddedGraph eg;
    eg.graph = Graph(4);
    for (VertexId v = 0; v < 3; ++v) {
        eg.graph.add_edge(v, (v + 1) % 3);
        eg.graph.add_edge(v, 3);
    }
    eg.rotation = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
    eg.outer = {{0, 1}};
    return eg;
}

EmbeddedGraph star(int leaves) {
    EmbeddedGraph eg;
    eg.graph = Graph(leaves + 1);
    eg.rotation.resize(leaves + 1);
    for (VertexId v = 1; v <= leaves; ++v) {
        eg.graph.add_edge(0, v);
        eg.rotation[0].push_back(v);
        eg.rotation[v] = {0};
    }
    eg.outer = {{0, 1}};
    return eg;
}

}  // namespace

TEST_SUITE_BEGIN("graph core");

TEST_CASE("edge normalization and adjacency") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(1, 3) == Edge{1, 3});

    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(3, 0);
    g.add_edge(1, 0);
    CHECK(g.neighbors(0) == std::vector<VertexId>{1, 2, 3});
    CHECK(g.degree(0) == 3);
    CHECK(g.max_degree() == 3);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});

    CHECK_THROWS_AS(g.add_edge(1, 1), structural_error);
    CHECK_THROWS_AS(g.add_edge(0, 1), structural_error);
    CHECK_THROWS_AS(g.add_edge(0, 4), structural_error);
    CHECK_THROWS_AS(g.add_edge(-1, 0), structural_error);
}

TEST_CASE("components, connectivity, cycles") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    CHECK(g.component_count() == 2);
    CHECK_FALSE(g.is_connected());
    CHECK_FALSE(g.has_cycle());
    g.add_edge(0, 2);
    CHECK(g.has_cycle());

    CHECK(Graph(0).is_connected());
    CHECK(Graph(1).is_connected());
    auto ids = g.component_ids();
    CHECK(ids[0] == ids[1]);
    CHECK(ids[0] == ids[2]);
    CHECK(ids[3] == ids[4]);
    CHECK(ids[0] != ids[3]);
}

TEST_CASE("face traversal on a triangle") {
    EmbeddedGraph eg = triangle();
    validate_rotation(eg);
    validate_outer(eg);
    auto faces = trace_faces(eg);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].darts.size() == 3);
    CHECK(faces[1].darts.size() == 3);
    // every dart exactly once
    int darts = 0;
    for (const auto& f : faces) darts += (int)f.darts.size();
    CHECK(darts == 6);
    CHECK(faces[0].vertices() == std::vector<VertexId>{0, 1, 2});

    EulerReport er = euler_certify(eg);
    CHECK(er.ok);
    CHECK(er.faces == 2);
}

TEST_CASE("single edge has one face walked from both sides") {
    EmbeddedGraph eg;
    eg.graph = Graph(2);
    eg.graph.add_edge(0, 1);
    eg.rotation = {{1}, {0}};
    eg.outer = {{0, 1}};
    auto faces = trace_faces(eg);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].darts.size() == 2);
    CHECK(euler_certify(eg).ok);
}

TEST_CASE("tetrahedron embedding has four triangular faces") {
    EmbeddedGraph eg = k4_wheel();
    validate_rotation(eg);
    auto faces = trace_faces(eg);
    CHECK(faces.size() == 4);
    for (const auto& f : faces) CHECK(f.darts.size() == 3);
    CHECK(euler_certify(eg).ok);
}

TEST_CASE("a non-planar rotation fails the genus certificate") {
    // K5 with sorted rotations cannot embed in the plane
    EmbeddedGraph eg;
    eg.graph = Graph(5);
    eg.rotation.resize(5);
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = 0; v < 5; ++v)
            if (u != v) {
                if (u < v) eg.graph.add_edge(u, v);
                eg.rotation[u].push_back(v);
            }
    eg.outer = {{0, 1}};
    EulerReport er = euler_certify(eg);
    CHECK_FALSE(er.ok);
    CHECK(er.vertices - er.edges + er.faces != 2);
}

TEST_CASE("euler certificate rejects empty and disconnected graphs") {
    EmbeddedGraph empty;
    CHECK_THROWS_AS(euler_certify(empty), structural_error);

    EmbeddedGraph two;
    two.graph = Graph(4);
    two.graph.add_edge(0, 1);
    two.graph.add_edge(2, 3);
    two.rotation = {{1}, {0}, {3}, {2}};
    two.outer = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(euler_certify(two), structural_error);
}

TEST_CASE("rotation and outer designation validation") {
    EmbeddedGraph eg = triangle();
    eg.rotation[1] = {0};  // misses neighbor 2
    CHECK_THROWS_AS(validate_rotation(eg), structural_error);

    eg = triangle();
    eg.rotation[1] = {0, 0};  // repeats a neighbor
    CHECK_THROWS_AS(validate_rotation(eg), structural_error);

    eg = triangle();
    eg.outer = {{0, 3}};  // not a dart of the graph
    CHECK_THROWS_AS(validate_outer(eg), structural_error);

    eg = triangle();
    eg.outer = {};  // edged component without a designation
    CHECK_THROWS_AS(validate_outer(eg), structural_error);

    eg = triangle();
    eg.outer = {{0, 1}, {1, 2}};  // two darts for one component
    CHECK_THROWS_AS(validate_outer(eg), structural_error);
}

TEST_CASE("expanding a degree-4 star splits the center into two degree-3 vertices") {
    EmbeddedGraph eg = star(4);
    ExpansionResult ex = expand_vertex(eg, 0);
    CHECK(ex.eg.graph.vertex_count() == 6);
    CHECK(ex.eg.graph.max_degree() == 3);
    // smallest-id cut: center keeps neighbors 1,2; the fresh vertex takes 3,4
    CHECK(ex.eg.graph.has_edge(0, 1));
    CHECK(ex.eg.graph.has_edge(0, 2));
    CHECK(ex.eg.graph.has_edge(0, 5));
    CHECK(ex.eg.graph.has_edge(5, 3));
    CHECK(ex.eg.graph.has_edge(5, 4));
    CHECK(ex.map.forward[0] == std::vector<VertexId>{0, 5});
    CHECK(ex.map.backward == std::vector<VertexId>{0, 1, 2, 3, 4, 0});
    CHECK(euler_certify(ex.eg).ok);

    Graph back = contract_paths(ex.eg.graph, ex.map);
    CHECK(back == eg.graph);
}

TEST_CASE("the anchor picks where the cyclic order is cut") {
    EmbeddedGraph eg = star(4);
    ExpansionResult ex = expand_vertex(eg, 0, 3);
    // linear order ends at the anchor: w = 4,1,2,3
    CHECK(ex.eg.graph.has_edge(0, 4));
    CHECK(ex.eg.graph.has_edge(0, 1));
    CHECK(ex.eg.graph.has_edge(5, 2));
    CHECK(ex.eg.graph.has_edge(5, 3));
    CHECK_THROWS_AS(expand_vertex(eg, 0, 2 + 40), precondition_error);

    // a low-degree vertex is a no-op before the anchor is ever looked at
    EmbeddedGraph tri = triangle();
    ExpansionResult noop = expand_vertex(tri, 0, 2 + 40);
    CHECK(noop.map.is_identity());
    CHECK(noop.eg.graph == tri.graph);
}

TEST_CASE("low-degree expansion is the identity") {
    EmbeddedGraph eg = triangle();
    ExpansionResult ex = expand_vertex(eg, 1);
    CHECK(ex.map.is_identity());
    CHECK(ex.eg.graph == eg.graph);
    CHECK(ex.eg.rotation == eg.rotation);
}

TEST_CASE("expanding a degree-5 hub yields a three-vertex path") {
    EmbeddedGraph eg = star(5);
    ExpansionResult ex = expand_to_degree_three(eg);
    CHECK(ex.eg.graph.vertex_count() == 8);
    CHECK(ex.eg.graph.max_degree() == 3);
    CHECK(ex.map.forward[0].size() == 3);
    CHECK(euler_certify(ex.eg).ok);
    CHECK(contract_paths(ex.eg.graph, ex.map) == eg.graph);

    // replacement path must be internally connected
    const auto& path = ex.map.forward[0];
    for (size_t i = 0; i + 1 < path.size(); ++i)
        CHECK(ex.eg.graph.has_edge(path[i], path[i + 1]));
}

TEST_CASE("contracting rejects a disconnected replacement path") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    ExpansionMap m;
    m.forward = {{0, 2}, {1}};
    m.backward = {0, 1, 0};
    CHECK_THROWS_AS(contract_paths(g, m), precondition_error);
}

TEST_CASE("identity maps") {
    ExpansionMap id = ExpansionMap::identity(3);
    CHECK(id.is_identity());
    CHECK(id.forward.size() == 3);
    CHECK(id.backward == std::vector<VertexId>{0, 1, 2});

    Graph g(3);
    g.add_edge(0, 1);
    CHECK(contract_paths(g, id) == g);
}

TEST_SUITE_END();
