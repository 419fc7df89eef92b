#pragma once

// Text formats: a strict canonical edge-list document and Graphviz DOT
// export with optional edge highlighting.

#include <string>
#include <string_view>
#include <vector>

#include "wcg/graph.hpp"

namespace wcg {

/// Canonical edge-list document: header line "n m", then m lines "u v" with
/// 0 <= u < v < n in ascending lexicographic order.
std::string write_edge_list(const Graph& g);

/// Parses the canonical format; throws std::runtime_error with a line
/// reference on any deviation (bad header, out-of-range or unordered
/// endpoints, duplicate or missing lines, trailing garbage).
Graph parse_edge_list(std::string_view text);

/// Deterministic DOT document; vertices keep their integer labels and appear
/// even when isolated. Highlighted edges (which must exist) are colored
/// purple, the convention for fill edges that are candidates for deletion.
std::string export_dot(const Graph& g, const std::vector<Edge>& highlight = {});

}  // namespace wcg
