#pragma once

#include <string>
#include <vector>

#include "planarrep/peel.hpp"
#include "planarrep/treedec.hpp"

namespace planarrep {

// which decomposition nodes hold each vertex; the per-vertex node sets are the
// subtrees whose pairwise intersections define the chordal factor
struct SubtreeModel {
    std::vector<std::vector<int>> nodes_of_vertex;  // sorted node ids per vertex
};

// ordered partition of the host's vertices into cliques (empty blocks allowed
// as padding); its width is the largest block-index gap over host edges
struct OrderedCliqueCover {
    Graph host;
    std::vector<std::vector<VertexId>> blocks;  // each sorted
};

struct CertifyReport {
    bool intersection = false;
    bool chordal = false;
    int cover_width = -1;
    int bound = -1;  // 2*t_star - 1
    int t_star = -1;
    bool treedec_valid = false;
    std::vector<std::string> violations;

    bool all_pass() const {
        return intersection && chordal && treedec_valid && cover_width >= 0 &&
               cover_width <= bound && violations.empty();
    }
};

// the full decomposition G = g1 (intersect) g2: g1 carries the ordered clique
// cover, g2 is chordal with the tree decomposition and subtree model as its
// certificate, and the report re-verifies everything from scratch
struct RepresentationPair {
    Graph g1;
    OrderedCliqueCover cover;
    Graph g2;
    SubtreeModel model;
    TreeDecomposition td;
    LayerPartition layers;
    int t_star = 0;
    CertifyReport report;
};

// node sets per vertex for a decomposition over a graph on n vertices
SubtreeModel subtree_model(const TreeDecomposition& td, int n);

// intersection graph of the per-vertex node subtrees: u~v iff some bag holds
// both; chordal whenever every vertex's nodes are connected in the tree, which
// is checked (precondition_error otherwise); vertex count derived from the bags
Graph chordal_from_subtrees(const TreeDecomposition& td);

// smallest per-layer clique budget: the largest clique of the chordal factor
// induced on any single layer
int compute_t_star(const TreeDecomposition& td, const LayerPartition& lp);

// partitions one layer into independent sets of the chordal factor via maximum
// cardinality search plus greedy coloring (optimal on chordal graphs); classes
// come back sorted by smallest member; more than `budget` classes is a breach
std::vector<std::vector<VertexId>> layer_coloring(const Graph& g2,
                                                  const std::vector<VertexId>& layer, int budget);

// builds g1 = g plus the edges completing each color class into a clique, and
// lays the classes out layer-major with empty padding to exactly t_star blocks
// per layer; the resulting cover width is asserted <= 2*t_star - 1
OrderedCliqueCover build_g1(const Graph& g, const LayerPartition& lp,
                            const std::vector<std::vector<std::vector<VertexId>>>& colorings,
                            int t_star);

// the layering-agnostic construction: from any valid tree decomposition and
// layering of g, produce g1/g2 with cover width <= 2*t_star - 1; the returned
// report is recomputed independently and must pass
RepresentationPair universal_representation(const Graph& g, const TreeDecomposition& td,
                                            const LayerPartition& lp);

// diagnostic record of the planar pipeline's intermediate stages
struct PlanarRunTrace {
    ExpansionMap map;
    LayerPartition expanded_layers;
    TreeDecomposition expanded_td;  // the layered decomposition before contraction
    std::vector<LayerStepStats> steps;
};

// end-to-end pipeline for a connected embedded planar graph: peel layers,
// expand to degree <= 3 along the recorded boundary anchors, re-peel, build the
// layered decomposition, contract it back, and run the universal construction;
// guarantees t_star <= 4 and cover width <= 7
RepresentationPair planar_representation(const EmbeddedGraph& eg, PlanarRunTrace* trace = nullptr);

}  // namespace planarrep
