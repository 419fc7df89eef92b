#pragma once

// Differential harness: compares the configuration detectors (can_delete)
// against the definitional weak-chordality oracle, edge by edge, either over
// every graph of a given order or over randomly generated weakly chordal
// instances.

#include <functional>
#include <vector>

#include "wcg/graph.hpp"
#include "wcg/randgen.hpp"

namespace wcg {

struct DetectorMismatch {
    Graph graph;  // weakly chordal graph probed
    Edge edge;
    bool detector_allows;
    bool oracle_allows;
};

/// Enumerates all 2^(n(n-1)/2) labeled graphs on n vertices. Guarded to
/// n <= 7 to keep misuse from running forever.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

/// Every weakly chordal graph on n vertices, every edge.
std::vector<DetectorMismatch> difftest_exhaustive(int n);

/// `trials` pipeline-generated weakly chordal graphs on n vertices (m
/// sampled), every edge of each.
std::vector<DetectorMismatch> difftest_random(int n, int trials, Seed seed);

}  // namespace wcg
