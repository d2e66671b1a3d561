#pragma once

#include <string>
#include <vector>

#include "planarrep/represent.hpp"

namespace planarrep {

struct ChordalityResult {
    bool chordal = false;
    std::vector<VertexId> elimination_order;  // a perfect elimination order when chordal
    std::vector<VertexId> witness_cycle;      // a chordless cycle of length >= 4 otherwise
};

// maximum cardinality search plus the standard elimination check; on failure a
// concrete chordless cycle is extracted as the witness
ChordalityResult is_chordal(const Graph& g);

struct IntersectionCheck {
    bool pass = false;
    Edge witness{-1, -1};
    std::string detail;
};

// pass iff the edge set of g equals the intersection of the factors' edge sets;
// on failure `witness` is an edge of the symmetric difference
IntersectionCheck intersection_equals(const Graph& g, const std::vector<Graph>& factors);

// width of a legal ordered clique cover; throws structural_error (naming the
// offending block or pair) when the blocks are not a partition into cliques
int cover_width(const OrderedCliqueCover& cover);

// exact smallest ordered-clique-cover width by exhaustive search; refuses
// graphs above `limit` vertices
int brute_ccw(const Graph& g, int limit = 8);

// exact bandwidth by exhaustive search over orderings; refuses graphs above
// `limit` vertices
int brute_bandwidth(const Graph& g, int limit = 8);

// independent re-verification of a representation pair against the input graph
// and layering; every claim is recomputed from the pair's raw parts
CertifyReport certify(const RepresentationPair& pair, const Graph& g, const LayerPartition& lp);

}  // namespace planarrep
