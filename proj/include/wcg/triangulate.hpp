#pragma once

// Embeds an arbitrary graph into a chordal supergraph with the classic
// minimum-degree elimination heuristic, recording every added (fill) edge in
// FIFO order for the later deletion stage.

#include <vector>

#include "wcg/graph.hpp"
#include "wcg/randgen.hpp"

namespace wcg {

enum class TieBreak {
    HighestIndex,  // deterministic default
    SeededRandom,  // uniform among minimum-degree vertices
};

struct TriangulationResult {
    Graph chordal;                       // input plus all fill edges
    std::vector<Edge> fill_queue;        // fill edges in insertion order
    std::vector<int> elimination_order;  // pruned degree-1 vertices first
};

/// Minimum-degree-vertex triangulation. The working copy first drops all
/// vertices of degree exactly 1 (single pass); then, until empty, a minimum
/// degree vertex is picked, its neighborhood is completed into a clique
/// (missing pairs enumerated in lexicographic order, added to the result
/// graph and the fill queue), and the vertex is removed. All n vertices stay
/// present in the returned chordal graph.
TriangulationResult mdv_triangulate(const Graph& g,
                                    TieBreak tie_break = TieBreak::HighestIndex,
                                    Seed tie_seed = {});

}  // namespace wcg
