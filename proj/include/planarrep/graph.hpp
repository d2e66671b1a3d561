#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarrep {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// normalized edge: smaller endpoint first
inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// malformed data: bad ids, loops, duplicates, broken rotations, missing designations
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// out-of-contract scalar arguments (sizes, ratios, limits)
struct parameter_error : std::runtime_error {
    explicit parameter_error(const std::string& what) : std::runtime_error(what) {}
};

// an operation was applied to data violating its stated precondition
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// a constructive stage broke one of its own guaranteed bounds; carries the stage tag
struct invariant_breach : std::runtime_error {
    std::string stage;
    invariant_breach(const std::string& stage_, const std::string& what)
        : std::runtime_error(stage_ + ": " + what), stage(stage_) {}
};

// simple undirected graph on dense ids 0..n-1 with sorted adjacency
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return (int)adj_.size(); }
    int edge_count() const { return edge_count_; }

    void add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;

    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const;
    int max_degree() const;

    std::vector<Edge> edges() const;  // lexicographically sorted
    std::vector<int> component_ids() const;
    int component_count() const;
    bool is_connected() const;  // vacuously true for the empty graph
    bool has_cycle() const;

    bool operator==(const Graph& other) const = default;

  private:
    void check_vertex(VertexId v, const char* op) const;

    std::vector<std::vector<VertexId>> adj_;
    int edge_count_ = 0;
};

struct Dart {
    VertexId from = -1;
    VertexId to = -1;
    auto operator<=>(const Dart&) const = default;
};

inline Dart reversed(Dart d) { return {d.to, d.from}; }

// rotation-system embedding; `outer` holds one boundary dart per edged component
// (exactly one for the connected inputs the pipeline accepts)
struct EmbeddedGraph {
    Graph graph;
    std::vector<std::vector<VertexId>> rotation;  // rotation[v]: cyclic neighbor order
    std::vector<Dart> outer;
};

struct FaceWalk {
    std::vector<Dart> darts;
    std::vector<VertexId> vertices() const;  // sorted, deduplicated
};

// throws structural_error unless rotation[v] is a permutation of neighbors(v) for all v
void validate_rotation(const EmbeddedGraph& eg);

// throws structural_error unless every outer dart is a real dart and edged
// components carry exactly one each (edgeless components none)
void validate_outer(const EmbeddedGraph& eg);

// all face boundary walks; every dart appears in exactly one walk; an edgeless
// graph yields the single unbounded face as one empty walk
std::vector<FaceWalk> trace_faces(const EmbeddedGraph& eg);

// the single walk through `start`
FaceWalk trace_face_from(const EmbeddedGraph& eg, Dart start);

struct EulerReport {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    bool ok = false;  // vertices - edges + faces == 2
};

// genus-zero certificate for a connected nonempty embedded graph
EulerReport euler_certify(const EmbeddedGraph& eg);

// original vertex -> its replacement path (in path order); length 1 = unchanged
struct ExpansionMap {
    std::vector<std::vector<VertexId>> forward;
    std::vector<VertexId> backward;  // replacement vertex -> original

    static ExpansionMap identity(int n);
    bool is_identity() const;
};

struct ExpansionResult {
    EmbeddedGraph eg;
    ExpansionMap map;
};

// Replaces v (degree d >= 4) by a path of d-2 vertices of degree <= 3, splicing
// it into the rotation so that contracting the path recovers the input embedding.
// The d incident edges attach along the path in rotation order w_0..w_{d-1}
// (two at each path end, one at each middle vertex). `anchor` picks the cut of
// the cyclic order: the linear order ends at the anchor neighbor (w_{d-1} ==
// anchor); anchor -1 starts it at the smallest-id neighbor instead. The first
// path vertex keeps id v, the rest take fresh ids at the end. Degree <= 3 is a
// no-op returning the identity map.
ExpansionResult expand_vertex(const EmbeddedGraph& eg, VertexId v, VertexId anchor = -1);

// Expands every vertex of degree >= 4, smallest id first, until max degree <= 3.
// `anchors`, when given, supplies one cut neighbor per input vertex (-1 entries
// fall back to the smallest-id cut); entries are remapped as neighbors get
// replaced by path vertices, so they stay valid across successive expansions.
ExpansionResult expand_to_degree_three(const EmbeddedGraph& eg,
                                       const std::vector<VertexId>* anchors = nullptr);

// Contracts each replacement path back to its original vertex: result is on the
// original ids, loops vanish, parallel edges merge. Every multi-vertex path must
// induce a connected subgraph of g.
Graph contract_paths(const Graph& g, const ExpansionMap& map);

}  // namespace planarrep
