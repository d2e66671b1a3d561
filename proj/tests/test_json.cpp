#include <string>

#include "doctest.h"
#include "planarrep/gen.hpp"
#include "planarrep/json_io.hpp"

using namespace planarrep;

TEST_SUITE_BEGIN("json");

TEST_CASE("minimal graph document round trips byte for byte") {
    GraphDoc doc = parse_graph(R"({"n": 1, "edges": []})");
    CHECK(doc.graph.vertex_count() == 1);
    CHECK(doc.graph.edge_count() == 0);
    CHECK(!doc.has_embedding());
    std::string canon = serialize_graph(doc);
    CHECK(serialize_graph(parse_graph(canon)) == canon);
}

TEST_CASE("embedded graph document parses and certifies") {
    std::string text = R"({
        "n": 4,
        "edges": [[0,1],[1,2],[2,3],[3,0]],
        "rotation": {"0": [3,1], "1": [0,2], "2": [1,3], "3": [2,0]},
        "outer_face": [0,1]
    })";
    GraphDoc doc = parse_graph(text);
    REQUIRE(doc.has_embedding());
    EmbeddedGraph eg = doc.embedded();
    CHECK(euler_certify(eg).ok);
    CHECK(eg.outer == std::vector<Dart>{{0, 1}});

    std::string canon = serialize_graph(doc);
    CHECK(serialize_graph(parse_graph(canon)) == canon);
}

TEST_CASE("generator output round trips") {
    EmbeddedGraph eg = random_planar({14, 808, 0.85});
    std::string text = serialize_embedded(eg);
    GraphDoc doc = parse_graph(text);
    CHECK(doc.graph == eg.graph);
    CHECK(serialize_graph(doc) == text);
    EmbeddedGraph back = doc.embedded();
    CHECK(euler_certify(back).ok);
}

TEST_CASE("rotations serialize cut at their smallest member") {
    EmbeddedGraph eg;
    eg.graph = Graph(3);
    eg.graph.add_edge(0, 1);
    eg.graph.add_edge(0, 2);
    eg.graph.add_edge(1, 2);
    eg.rotation = {{2, 1}, {0, 2}, {1, 0}};  // same cyclic orders, awkward cuts
    eg.outer = {{0, 2}};
    std::string text = serialize_embedded(eg);
    CHECK(text.find("[1,2]") == std::string::npos);  // dump(2) spaces elements
    CHECK(text.find("\"0\": [") != std::string::npos);
    GraphDoc doc = parse_graph(text);
    CHECK(doc.rotation[0] == std::vector<VertexId>{1, 2});
    CHECK(doc.rotation[1] == std::vector<VertexId>{0, 2});
    CHECK(doc.rotation[2] == std::vector<VertexId>{0, 1});
}

TEST_CASE("named vertices round trip through every field") {
    std::string text = R"({
        "n": 3,
        "ids": ["lo", "mid", "hi"],
        "edges": [["lo","mid"],["mid","hi"],["hi","lo"]],
        "rotation": {"lo": ["mid","hi"], "mid": ["hi","lo"], "hi": ["lo","mid"]},
        "outer_face": ["lo","mid"]
    })";
    GraphDoc doc = parse_graph(text);
    CHECK(doc.ids == std::vector<std::string>{"lo", "mid", "hi"});
    CHECK(doc.graph.edge_count() == 3);
    std::string canon = serialize_graph(doc);
    CHECK(canon.find("\"lo\"") != std::string::npos);
    CHECK(serialize_graph(parse_graph(canon)) == canon);
}

TEST_CASE("parser names the offending field") {
    auto rejects = [](const std::string& text, const char* needle) {
        CHECK_THROWS_WITH_AS(parse_graph(text), doctest::Contains(needle), structural_error);
    };
    rejects(R"({"edges": []})", "n");
    rejects(R"({"n": 0, "edges": []})", "n");
    rejects(R"({"n": 2, "edges": [[0,1],[1,0]]})", "duplicate edge");
    rejects(R"({"n": 2, "edges": [[1,1]]})", "loop");
    rejects(R"({"n": 2, "edges": [[0,5]]})", "edges[");
    rejects(R"({"n": 2, "edges": [], "extra": 1})", "extra");
    rejects(R"({"n": 2, "edges": [[0,1]], "ids": ["a"]})", "ids");
    rejects(R"({"n": 2, "edges": [[0,1]], "ids": ["a","a"]})", "ids");
    rejects("{bad json", "");
}

TEST_CASE("parser rejects broken embeddings") {
    auto rejects = [](const std::string& text, const char* needle) {
        CHECK_THROWS_WITH_AS(parse_graph(text), doctest::Contains(needle), structural_error);
    };
    // rotation entry missing a neighbor
    rejects(R"({"n": 3, "edges": [[0,1],[1,2],[2,0]],
              "rotation": {"0": [1], "1": [0,2], "2": [1,0]},
              "outer_face": [0,1]})",
            "rotation");
    // rotation naming an unknown vertex key
    rejects(R"({"n": 2, "edges": [[0,1]],
              "rotation": {"0": [1], "1": [0], "9": []},
              "outer_face": [0,1]})",
            "rotation");
    // outer_face missing although the rotation is present
    rejects(R"({"n": 2, "edges": [[0,1]], "rotation": {"0": [1], "1": [0]}})", "outer_face");
    // outer_face without any rotation
    rejects(R"({"n": 2, "edges": [[0,1]], "outer_face": [0,1]})", "outer_face");
    // outer_face dart that is not an edge
    rejects(R"({"n": 3, "edges": [[0,1],[1,2],[2,0]],
              "rotation": {"0": [1,2], "1": [2,0], "2": [0,1]},
              "outer_face": [0,0]})",
            "outer_face");
    // a rotation on a disconnected graph
    rejects(R"({"n": 4, "edges": [[0,1],[2,3]],
              "rotation": {"0": [1], "1": [0], "2": [3], "3": [2]},
              "outer_face": [0,1]})",
            "connected");
    // an embedding that fails the genus test: K5 has no planar rotation
    rejects(R"({"n": 5,
              "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],
              "rotation": {"0": [1,2,3,4], "1": [0,2,3,4], "2": [0,1,3,4],
                           "3": [0,1,2,4], "4": [0,1,2,3]},
              "outer_face": [0,1]})",
            "Euler");
}

TEST_CASE("representation pair documents round trip") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    TreeDecomposition td = bodlaender_decomposition(g, maximal_spanning_forest(g));
    LayerPartition lp;
    lp.layers = {{0, 1, 2}};
    RepresentationPair pair = universal_representation(g, td, lp);

    std::string text = serialize_pair(pair);
    RepresentationPair back = parse_pair(text);
    CHECK(back.g1 == pair.g1);
    CHECK(back.g2 == pair.g2);
    CHECK(back.cover.blocks == pair.cover.blocks);
    CHECK(back.td.bags == pair.td.bags);
    CHECK(back.td.tree == pair.td.tree);
    CHECK(back.layers.layers == pair.layers.layers);
    CHECK(back.t_star == pair.t_star);
    CHECK(back.report.intersection == pair.report.intersection);
    CHECK(serialize_pair(back) == text);
}

TEST_CASE("pipeline pair documents stay byte-stable") {
    EmbeddedGraph eg = fixture({FixtureKind::nested_cycles, 2, 4});
    RepresentationPair pair = planar_representation(eg);
    std::string text = serialize_pair(pair);
    CHECK(serialize_pair(parse_pair(text)) == text);
}

TEST_CASE("parse_pair rejects malformed documents") {
    CHECK_THROWS_AS(parse_pair("{}"), structural_error);
    CHECK_THROWS_AS(parse_pair("not json"), structural_error);

    Graph g(2);
    g.add_edge(0, 1);
    TreeDecomposition td = bodlaender_decomposition(g, maximal_spanning_forest(g));
    LayerPartition lp;
    lp.layers = {{0, 1}};
    RepresentationPair pair = universal_representation(g, td, lp);
    std::string text = serialize_pair(pair);

    // surgically null out a required section
    auto pos = text.find("\"t_star\"");
    REQUIRE(pos != std::string::npos);
    std::string broken = text.substr(0, pos) + "\"t_star\": null, \"x" + text.substr(pos + 1);
    CHECK_THROWS_AS(parse_pair(broken), structural_error);
}

TEST_CASE("report serialization carries the verdict") {
    CertifyReport report;
    report.intersection = true;
    report.chordal = true;
    report.treedec_valid = true;
    report.cover_width = 3;
    report.bound = 7;
    report.t_star = 4;
    std::string text = serialize_report(report);
    CHECK(text.find("\"intersection\": true") != std::string::npos);
    CHECK(text.find("\"cover_width\": 3") != std::string::npos);
    CHECK(text.find("\"treedec_valid\": true") != std::string::npos);
    CHECK(text.find("\"violations\": []") != std::string::npos);

    report.violations.push_back("sample defect");
    CHECK(serialize_report(report).find("sample defect") != std::string::npos);
}

TEST_CASE("dot rendering") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    std::string plain = to_dot(g);
    CHECK(plain.find("graph") != std::string::npos);
    CHECK(plain.find("0 -- 1;") != std::string::npos);
    CHECK(plain.find("1 -- 2;") != std::string::npos);

    OrderedCliqueCover cover;
    cover.host = g;
    cover.blocks = {{0, 2}, {1}};
    std::string colored = to_dot(g, &cover);
    CHECK(colored.find("fillcolor") != std::string::npos);
}

TEST_SUITE_END();
