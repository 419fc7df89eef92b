#pragma once

// Weak-chordality-preserving edge deletion. Deleting one edge {u,v} from a
// weakly chordal graph can break the property in exactly three small shapes,
// all living on the chordless P3/P4 paths that connect u and v afterwards:
//
//   hole on a P3 + P4   -> an induced 5-cycle through u and v
//   hole on two P4s     -> an induced 6-cycle through u and v
//   anti-hole           -> two P3s + one P4 inducing the complement of a
//                          6-cycle (every vertex of degree three, one chord
//                          from each P3 midpoint to distinct P4 midpoints)
//
// The detectors below find these configurations; the deletion loop drains a
// FIFO of candidate edges, re-queueing any whose removal is blocked.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "wcg/graph.hpp"

namespace wcg {

enum class HoleKind { P3PlusP4, P4PlusP4 };

/// Two internally disjoint chordless paths between the same endpoints whose
/// union is an induced 5- or 6-cycle. For P3PlusP4, path_a is the P3.
struct HoleWitness {
    HoleKind kind;
    ChordlessPath path_a;
    ChordlessPath path_b;
};

/// Six vertices inducing the complement of a 6-cycle: endpoints u, v, the
/// midpoints of two P3s, and the midpoints of one P4. chord_a connects
/// p3_a's midpoint to one P4 midpoint, chord_b connects p3_b's to the other.
struct AntiholeWitness {
    ChordlessPath p3_a;
    ChordlessPath p3_b;
    ChordlessPath p4;
    Edge chord_a;
    Edge chord_b;
};

using RejectionWitness = std::variant<HoleWitness, AntiholeWitness>;

/// Requires {u,v} already absent. Scans P3+P4 pairs first, then P4 pairs,
/// lexicographically in enumeration order; returns the first hit.
std::optional<HoleWitness> find_hole_config(const Graph& t, int u, int v);

/// Requires {u,v} already absent. Scans (P3, P3, P4) triples
/// lexicographically; returns the first hit.
std::optional<AntiholeWitness> find_antihole_config(const Graph& t, int u, int v);

struct DeletionCheck {
    bool ok = false;
    std::optional<RejectionWitness> witness;
};

/// Temporarily removes e (which must be present), probes for hole then
/// anti-hole configurations, and reinserts e before returning. The graph is
/// unchanged on exit.
DeletionCheck can_delete(Graph& t, Edge e);

/// Per-probe instrumentation; degrees are taken in the graph with the edge
/// removed, the same graph the path search runs on.
struct DeletionQueryLog {
    int u = 0;
    int v = 0;
    int degree_u = 0;
    int degree_v = 0;
    std::size_t p3_count = 0;
    std::size_t p4_count = 0;
};

struct DeletionOutcome {
    Graph final_graph;
    std::vector<Edge> deleted;   // in deletion order
    std::vector<Edge> retained;  // queue contents on exit
    int rounds = 0;
};

/// Deletion loop over the fill queue. One round processes a snapshot of the
/// queue: each popped edge is removed if no configuration appears, otherwise
/// pushed to the back. The loop exits when a round changes nothing or the
/// queue empties. Requires every queue edge to be present in h, with no
/// duplicates; h is expected to be chordal (hence weakly chordal) on entry.
DeletionOutcome chordal_to_weakly_chordal(const Graph& h,
                                          const std::vector<Edge>& fill_queue,
                                          std::vector<DeletionQueryLog>* query_log = nullptr);

}  // namespace wcg
