#pragma once

#include <string>
#include <vector>

#include "planarrep/graph.hpp"

namespace planarrep {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// the full pinned acceptance battery; one result per criterion
std::vector<CriterionResult> run_acceptance();

// every connected graph on exactly n vertices, one per isomorphism class
// (canonical representatives), n <= 6
std::vector<Graph> connected_catalog(int n);

// exhaustive check for induced cycles of length >= 4 (true = none, chordal)
bool naive_chordal(const Graph& g);

}  // namespace planarrep
