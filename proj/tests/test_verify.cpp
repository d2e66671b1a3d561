#include <algorithm>
#include <set>

#include "doctest.h"
#include "planarrep/gen.hpp"
#include "planarrep/verify.hpp"

using namespace planarrep;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// a cycle given as a vertex sequence is chordless in g iff consecutive pairs
// (cyclically) are exactly the adjacent ones
bool chordless_in(const Graph& g, const std::vector<VertexId>& cyc) {
    const int k = (int)cyc.size();
    if (k < 4) return false;
    std::set<VertexId> dedup(cyc.begin(), cyc.end());
    if ((int)dedup.size() != k) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("verification");

TEST_CASE("chordality of simple shapes") {
    CHECK(is_chordal(path_graph(6)).chordal);
    CHECK(is_chordal(star_graph(5)).chordal);
    CHECK(is_chordal(complete_graph(4)).chordal);
    CHECK(is_chordal(Graph(3)).chordal);
    CHECK(!is_chordal(cycle_graph(4)).chordal);
    CHECK(!is_chordal(cycle_graph(5)).chordal);
    // a triangle with a pendant is chordal
    Graph g = cycle_graph(3);
    Graph h(4);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(2, 3);
    CHECK(is_chordal(h).chordal);
}

TEST_CASE("non-chordal graphs come with a chordless witness cycle") {
    for (int n = 4; n <= 7; ++n) {
        ChordalityResult res = is_chordal(cycle_graph(n));
        REQUIRE(!res.chordal);
        CHECK(chordless_in(cycle_graph(n), res.witness_cycle));
    }
    // two squares sharing an edge: still full of chordless 4-cycles
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    g.add_edge(2, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    ChordalityResult res = is_chordal(g);
    REQUIRE(!res.chordal);
    CHECK(chordless_in(g, res.witness_cycle));
}

TEST_CASE("chordal graphs come with a perfect elimination order") {
    for (int i = 0; i < 10; ++i) {
        // random chordal graph: a tree plus its own square on a few vertices
        EmbeddedGraph eg = random_planar({8 + i, 5100ull + i, 1.0});
        Graph g2 = chordal_from_subtrees(
            bodlaender_decomposition(eg.graph, maximal_spanning_forest(eg.graph)));
        ChordalityResult res = is_chordal(g2);
        REQUIRE(res.chordal);
        REQUIRE((int)res.elimination_order.size() == g2.vertex_count());
        // eliminate in order: each vertex's later neighbors must form a clique
        std::vector<int> pos(g2.vertex_count());
        for (int p = 0; p < (int)res.elimination_order.size(); ++p)
            pos[res.elimination_order[p]] = p;
        for (VertexId v : res.elimination_order) {
            std::vector<VertexId> later;
            for (VertexId w : g2.neighbors(v))
                if (pos[w] > pos[v]) later.push_back(w);
            for (size_t a = 0; a < later.size(); ++a)
                for (size_t b = a + 1; b < later.size(); ++b)
                    CHECK(g2.has_edge(later[a], later[b]));
        }
    }
}

TEST_CASE("intersection check") {
    Graph g = cycle_graph(5);
    CHECK(intersection_equals(g, {g, complete_graph(5)}).pass);
    CHECK(intersection_equals(g, {g, g, g}).pass);

    Graph missing(5);  // g minus the edge 0-1
    for (auto [u, v] : g.edges())
        if (make_edge(u, v) != Edge{0, 1}) missing.add_edge(u, v);
    IntersectionCheck res = intersection_equals(g, {missing, g});
    CHECK(!res.pass);
    CHECK(res.witness == Edge{0, 1});

    // an edge in every factor but not the graph
    IntersectionCheck extra = intersection_equals(missing, {g, g});
    CHECK(!extra.pass);
    CHECK(extra.witness == Edge{0, 1});

    CHECK_THROWS_AS(intersection_equals(g, {}), parameter_error);
    CHECK_THROWS_AS(intersection_equals(g, {complete_graph(4)}), structural_error);
}

TEST_CASE("cover width of legal covers") {
    OrderedCliqueCover whole;
    whole.host = complete_graph(4);
    whole.blocks = {{0, 1, 2, 3}};
    CHECK(cover_width(whole) == 0);

    OrderedCliqueCover singles;
    singles.host = path_graph(4);
    singles.blocks = {{0}, {1}, {2}, {3}};
    CHECK(cover_width(singles) == 1);

    OrderedCliqueCover padded;
    padded.host = path_graph(4);
    padded.blocks = {{0}, {1}, {}, {2}, {3}};
    CHECK(cover_width(padded) == 2);  // the empty block stretches the 1-2 gap

    OrderedCliqueCover c5;
    c5.host = cycle_graph(5);
    c5.blocks = {{0, 1}, {2, 3}, {4}};
    CHECK(cover_width(c5) == 2);
}

TEST_CASE("cover width rejects illegal covers") {
    OrderedCliqueCover not_clique;
    not_clique.host = cycle_graph(5);
    not_clique.blocks = {{0, 1}, {2, 4}, {3}};
    CHECK_THROWS_WITH_AS(cover_width(not_clique), doctest::Contains("not a clique"),
                         structural_error);

    OrderedCliqueCover missing;
    missing.host = path_graph(3);
    missing.blocks = {{0}, {1}};
    CHECK_THROWS_AS(cover_width(missing), structural_error);

    OrderedCliqueCover doubled;
    doubled.host = path_graph(3);
    doubled.blocks = {{0, 1}, {1}, {2}};
    CHECK_THROWS_AS(cover_width(doubled), structural_error);

    OrderedCliqueCover unknown;
    unknown.host = path_graph(3);
    unknown.blocks = {{0, 1}, {2, 9}};
    CHECK_THROWS_AS(cover_width(unknown), structural_error);
}

TEST_CASE("exact cover width of small graphs") {
    CHECK(brute_ccw(complete_graph(2)) == 0);
    CHECK(brute_ccw(complete_graph(4)) == 0);
    CHECK(brute_ccw(complete_graph(6)) == 0);
    CHECK(brute_ccw(path_graph(5)) == 1);
    CHECK(brute_ccw(cycle_graph(4)) == 1);
    CHECK(brute_ccw(cycle_graph(5)) == 2);
    CHECK(brute_ccw(cycle_graph(6)) == 2);
    CHECK(brute_ccw(star_graph(3)) == 1);
    CHECK(brute_ccw(Graph(1)) == 0);
}

TEST_CASE("exact bandwidth of small graphs") {
    CHECK(brute_bandwidth(path_graph(2)) == 1);
    CHECK(brute_bandwidth(path_graph(6)) == 1);
    CHECK(brute_bandwidth(complete_graph(4)) == 3);
    CHECK(brute_bandwidth(cycle_graph(5)) == 2);
    CHECK(brute_bandwidth(cycle_graph(6)) == 2);
    CHECK(brute_bandwidth(star_graph(4)) == 2);
    CHECK(brute_bandwidth(Graph(1)) == 0);
}

TEST_CASE("cover width never exceeds bandwidth") {
    for (int i = 0; i < 15; ++i) {
        EmbeddedGraph eg = random_planar({4 + i % 5, 6200ull + i, 1.0 - 0.1 * (i % 3)});
        CHECK(brute_ccw(eg.graph) <= brute_bandwidth(eg.graph));
    }
}

TEST_CASE("exhaustive oracles refuse big inputs") {
    CHECK_THROWS_AS(brute_ccw(path_graph(9)), parameter_error);
    CHECK_THROWS_AS(brute_bandwidth(path_graph(9)), parameter_error);
    CHECK(brute_ccw(path_graph(9), 9) == 1);
    CHECK(brute_bandwidth(path_graph(9), 9) == 1);
}

TEST_CASE("certify re-checks a good pair end to end") {
    Graph g = path_graph(4);
    LayerPartition lp;
    lp.layers = {{0, 1, 2, 3}};
    TreeDecomposition td = bodlaender_decomposition(g, maximal_spanning_forest(g));
    RepresentationPair pair = universal_representation(g, td, lp);
    CertifyReport report = certify(pair, g, lp);
    CHECK(report.all_pass());
    CHECK(report.intersection);
    CHECK(report.chordal);
    CHECK(report.treedec_valid);
    CHECK(report.cover_width == pair.report.cover_width);
}

TEST_CASE("certify catches a tampered chordal factor") {
    Graph g = path_graph(4);
    LayerPartition lp;
    lp.layers = {{0, 1, 2, 3}};
    TreeDecomposition td = bodlaender_decomposition(g, maximal_spanning_forest(g));
    RepresentationPair pair = universal_representation(g, td, lp);

    // drop an edge of g from g2; the intersection loses it too
    Graph g2(4);
    for (auto [u, v] : pair.g2.edges())
        if (make_edge(u, v) != Edge{0, 1}) g2.add_edge(u, v);
    pair.g2 = g2;
    CertifyReport report = certify(pair, g, lp);
    CHECK(!report.intersection);
    CHECK(!report.all_pass());
}

TEST_CASE("certify catches a reordered cover") {
    Graph g = path_graph(4);
    LayerPartition lp = [] {
        LayerPartition out;
        out.layers = {{0}, {1}, {2}, {3}};
        return out;
    }();
    TreeDecomposition td = bodlaender_decomposition(g, maximal_spanning_forest(g));
    RepresentationPair pair = universal_representation(g, td, lp);
    REQUIRE(pair.cover.blocks.size() >= 4);

    // swapping the first and last blocks stretches an edge past the bound
    std::swap(pair.cover.blocks.front(), pair.cover.blocks.back());
    CertifyReport report = certify(pair, g, lp);
    CHECK(report.cover_width > report.bound);
    CHECK(!report.all_pass());
}

TEST_CASE("certify reports an illegal cover without throwing") {
    Graph g = path_graph(3);
    LayerPartition lp;
    lp.layers = {{0, 1, 2}};
    TreeDecomposition td = bodlaender_decomposition(g, maximal_spanning_forest(g));
    RepresentationPair pair = universal_representation(g, td, lp);

    pair.cover.blocks[0].clear();  // vertices go missing from the partition
    CertifyReport report = certify(pair, g, lp);
    CHECK(report.cover_width == -1);
    CHECK(!report.all_pass());
    CHECK(!report.violations.empty());
}

TEST_SUITE_END();
