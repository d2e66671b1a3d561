#pragma once

#include <string>
#include <vector>

#include "planarrep/represent.hpp"

namespace planarrep {

// graph document {"n", "ids"?, "edges", "rotation"?, "outer_face"?}: vertices
// are 0-based integers, or names when "ids" is present; a rotation requires a
// connected graph passing the Euler test, plus "outer_face" when there are edges
struct GraphDoc {
    Graph graph;
    std::vector<std::vector<VertexId>> rotation;  // empty when the doc has none
    std::vector<Dart> outer;
    std::vector<std::string> ids;  // empty when unnamed

    bool has_embedding() const { return !rotation.empty(); }
    EmbeddedGraph embedded() const;  // throws structural_error without an embedding
};

// strict parser: malformed documents raise structural_error naming the field
GraphDoc parse_graph(const std::string& text);

// canonical form: fixed key order, sorted edges, each rotation list cut at its
// smallest member; parse-serialize round trips are byte-stable
std::string serialize_graph(const GraphDoc& doc);
std::string serialize_graph(const Graph& g);
std::string serialize_embedded(const EmbeddedGraph& eg);

std::string serialize_pair(const RepresentationPair& pair);
RepresentationPair parse_pair(const std::string& text);

std::string serialize_report(const CertifyReport& report);

// graphviz rendering; a cover colors vertices by block
std::string to_dot(const Graph& g, const OrderedCliqueCover* cover = nullptr);

}  // namespace planarrep
