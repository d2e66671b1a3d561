#pragma once

#include <cstdint>
#include <string>

#include "planarrep/graph.hpp"

namespace planarrep {

// deterministic recipe for one random embedded planar graph
struct GenSpec {
    int n = 1;
    std::uint64_t seed = 0;
    double edge_keep_ratio = 1.0;  // in (0, 1]
};

// Connected embedded planar graph: grows a triangulation by inserting each new
// vertex into a seeded-uniform face (joined to its three corners), then deletes
// a seeded subset of non-bridge edges down to roughly edge_keep_ratio of the
// triangulation. Same spec, same graph, bit for bit.
EmbeddedGraph random_planar(const GenSpec& spec);

enum class FixtureKind { grid, cycle, wheel, nested_cycles, path, complete };

struct FixtureSpec {
    FixtureKind kind = FixtureKind::path;
    int a = 0;
    int b = 0;  // second parameter for grid / nested_cycles
};

// canonical embedded fixtures: grid(a,b), cycle(m), wheel(m): m rim vertices
// plus a hub, nested_cycles(k,m): k concentric m-cycles joined by spokes,
// path(m), complete(m<=4)
EmbeddedGraph fixture(const FixtureSpec& spec);

// "cycle:5", "grid:2,3", "nested_cycles:3,4", ...
FixtureSpec parse_fixture(const std::string& text);

}  // namespace planarrep
