#pragma once

// End-to-end driver: (optionally) generate a random graph, repair
// connectivity, stop early if the input is already weakly chordal, otherwise
// triangulate and delete fill edges while the property survives.

#include <optional>
#include <vector>

#include "wcg/graph.hpp"
#include "wcg/randgen.hpp"
#include "wcg/triangulate.hpp"
#include "wcg/wcd_edit.hpp"

namespace wcg {

struct PipelineReport {
    int n = 0;
    int m_input = 0;       // edges of the generated/injected graph, pre-repair
    int repair_edges = 0;  // edges added to connect components
    bool input_was_weakly_chordal = false;
    int fill_added = 0;
    int fill_deleted = 0;
    int fill_retained = 0;
    int rounds = 0;
    Seed seed;

    friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

struct PipelineOptions {
    TieBreak tie_break = TieBreak::HighestIndex;
    std::vector<DeletionQueryLog>* query_log = nullptr;
};

struct PipelineResult {
    Graph graph;  // final weakly chordal graph
    PipelineReport report;
    Graph arbitrary;                  // connected input entering triangulation
    Graph chordal;                    // triangulated stage (== arbitrary on early exit)
    std::vector<Edge> fill_edges;     // deletion candidates produced by triangulation
    std::vector<Edge> retained_fill;  // candidates that had to stay
};

/// Runs repair -> recognition -> triangulation -> deletion on a given graph.
/// The seed feeds the repair and tie-break streams only.
PipelineResult transform_to_weakly_chordal(const Graph& input, Seed seed,
                                           const PipelineOptions& options = {});

/// Full pipeline from scratch: samples m when absent, generates G(n,m), then
/// transforms it. Requires n >= 2 and, when given, 0 <= m <= n(n-1)/2.
PipelineResult generate_weakly_chordal(int n, std::optional<int> m, Seed seed,
                                       const PipelineOptions& options = {});

}  // namespace wcg
