#pragma once

#include <map>
#include <string>
#include <vector>

#include "planarrep/graph.hpp"
#include "planarrep/peel.hpp"

namespace planarrep {

// spanning forest with remember numbers: er(e) counts the fundamental-cycle
// detours crossing tree edge e, vr(v) those passing through vertex v
// (endpoints included); both are relative to the host graph they were
// computed against
struct SpanningForestAnnotated {
    Graph forest;
    std::map<Edge, int> edge_remember;  // tree edges only; 0 elsewhere by definition
    std::vector<int> vertex_remember;

    int max_edge_remember() const;
    int max_vertex_remember() const;
};

// BFS forest rooted at the smallest id of each component, annotated against g
SpanningForestAnnotated maximal_spanning_forest(const Graph& g);

// forest with remember numbers recomputed against the given host
SpanningForestAnnotated annotate_forest(const Graph& host, Graph forest);

// the unique a..b path in the forest, as a vertex sequence
std::vector<VertexId> detour(const SpanningForestAnnotated& f, VertexId a, VertexId b);

struct NodeOrigin {
    bool is_edge = false;
    VertexId v = -1;   // original-vertex nodes
    Edge e{-1, -1};    // subdivision nodes
};

struct TreeDecomposition {
    Graph tree;  // acyclic; one tree per host component
    std::vector<std::vector<VertexId>> bags;  // sorted
    std::vector<NodeOrigin> origin;

    int node_count() const { return (int)bags.size(); }
    int width() const;  // max bag size - 1
};

// Subdivided-forest decomposition: one node per forest vertex (bag {v}) and per
// forest edge (bag {a,b}); for each non-tree edge, its smaller endpoint joins
// every bag along the detour. Width is asserted <= max{vr, er+1}.
TreeDecomposition bodlaender_decomposition(const Graph& g, const SpanningForestAnnotated& f);

struct TreeDecCheck {
    bool pass = false;
    std::string failed_axiom;  // tree-shape | coverage | edge-coverage | subtree-connectivity
    std::string detail;
};

TreeDecCheck validate_treedec(const Graph& g, const TreeDecomposition& td);

// Grows h_forest (a maximal spanning forest of g minus its outer-boundary walk
// edges) into a forest of g by adding boundary edges only; remember numbers are
// recomputed and must rise by <= 2 per tree edge and <= max degree per vertex.
SpanningForestAnnotated extend_forest(const EmbeddedGraph& g, const SpanningForestAnnotated& h_forest);

// Rebuilds the decomposition over the extended forest and checks it against
// `prior`: every prior bag survives as a subset, growing only by outer-boundary
// vertices, <= max degree per vertex node and <= 2 per edge node.
TreeDecomposition extend_decomposition(const EmbeddedGraph& g, const SpanningForestAnnotated& t,
                                       const TreeDecomposition& prior);

struct LayerStepStats {
    int stage_index = 0;  // 1-based, counted from the outermost stage
    int max_degree = 0;
    int max_er_increment = 0;
    int max_vr_increment = 0;
};

struct LayeredDecomposition {
    TreeDecomposition td;
    SpanningForestAnnotated forest;
    std::vector<LayerStepStats> steps;
};

// Peels boundary edges down to the acyclic core, then extends the trivial core
// decomposition back out stage by stage. Every bag of the result meets every
// layer of `layers` in <= 4 vertices (asserted).
LayeredDecomposition layered_decomposition(const EmbeddedGraph& eg_expanded,
                                           const LayerPartition& layers);

// rewrites every bag through the contraction map (replacement path -> original)
TreeDecomposition contract_decomposition(const TreeDecomposition& td, const ExpansionMap& m);

}  // namespace planarrep
