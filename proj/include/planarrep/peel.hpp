#pragma once

#include <string>
#include <vector>

#include "planarrep/graph.hpp"

namespace planarrep {

// disjoint nonempty vertex layers covering V; every edge stays within a layer
// or joins two consecutive ones
struct LayerPartition {
    std::vector<std::vector<VertexId>> layers;  // each sorted

    int depth() const { return (int)layers.size(); }
    // layer index per vertex (1-based, 0 = unassigned), for a graph on n vertices
    std::vector<int> layer_index(int n) const;
};

struct BoundaryInfo {
    std::vector<VertexId> vertices;  // walk vertices plus isolated vertices, sorted
    std::vector<Edge> edges;         // walk edges, sorted
};

// vertices and edges on the designated outer boundary walk(s); isolated
// vertices count as their own boundary
BoundaryInfo outer_boundary(const EmbeddedGraph& eg);

// an intermediate peeling state: induced embedding on the surviving vertices,
// relabeled to dense local ids with a map back to the input's ids
struct Residual {
    EmbeddedGraph eg;
    std::vector<VertexId> to_global;
};

struct PeelResult {
    LayerPartition layers;
    // residuals[i] = the embedded graph layer i+1 was read from (residuals[0]
    // is the input itself)
    std::vector<Residual> residuals;
    // exposure[v] = the walk neighbor the boundary walk arrived from when v was
    // first visited at its peeling round; -1 for vertices isolated at their round
    std::vector<VertexId> exposure;
};

// iterated removal of outer-boundary vertices; layer indices are global, so a
// component freed at round i contributes to layer i onward
PeelResult peel_layers(const EmbeddedGraph& eg);

struct LayerCheck {
    bool pass = false;
    Edge violation{-1, -1};
    std::string detail;
};

// pass iff lp partitions V(g) and every edge is intra-layer or layer-consecutive
LayerCheck validate_layering(const Graph& g, const LayerPartition& lp);

struct EdgePeelStage {
    EmbeddedGraph before;                  // the graph this stage's removal acted on
    std::vector<Edge> removed;             // its outer-boundary walk edges, all components
    std::vector<VertexId> outer_vertices;  // its outer-boundary vertices
};

struct EdgePeelResult {
    std::vector<EdgePeelStage> stages;  // empty when the input is already acyclic
    EmbeddedGraph core;                 // final acyclic graph, same vertex ids throughout
};

// repeatedly removes the outer-boundary walk edges of every edged component
// (vertices retained) until the whole graph is acyclic; the acyclicity test
// runs before each removal, so forests peel in zero stages
EdgePeelResult boundary_edge_peel(const EmbeddedGraph& eg);

}  // namespace planarrep
