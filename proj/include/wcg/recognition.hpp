#pragma once

// Ground-truth predicates. A graph is weakly chordal when neither it nor its
// complement contains a hole (an induced chordless cycle on five or more
// vertices). Both predicates here are definitional brute-force searches;
// they are the oracle the fast configuration detectors are tested against.

#include <optional>
#include <vector>

#include "wcg/graph.hpp"

namespace wcg {

enum class HoleLocation { InGraph, InComplement };

struct RecognitionVerdict {
    bool weakly_chordal = false;
    std::optional<std::vector<int>> hole;  // induced cycle, length >= 5
    HoleLocation hole_location = HoleLocation::InGraph;
};

/// Searches the graph first, then its complement; within each, witness order
/// is fixed by find_chordless_cycle (smallest starting vertex first).
RecognitionVerdict is_weakly_chordal(const Graph& g);

/// True iff the graph has no induced chordless cycle of length >= 4.
bool is_chordal(const Graph& g);

}  // namespace wcg
