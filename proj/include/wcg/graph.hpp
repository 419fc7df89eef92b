#pragma once

// Simple undirected graph with a dense adjacency matrix (constant-time edge
// tests) and sorted per-vertex neighbor lists (ordered enumeration). Vertex
// ids are dense integers in [0, n).

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace wcg {

/// Unordered vertex pair; the smaller endpoint is always stored in `u`.
struct Edge {
    int u;
    int v;

    Edge(int a, int b);
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
    int degree(int v) const;

    /// Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const;

    /// Returns true iff the edge was absent and has been inserted.
    bool add_edge(int u, int v);
    bool add_edge(Edge e) { return add_edge(e.u, e.v); }

    /// Returns true iff the edge was present and has been removed.
    bool remove_edge(int u, int v);
    bool remove_edge(Edge e) { return remove_edge(e.u, e.v); }

    /// All edges in ascending lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    /// Throws std::logic_error if the internal representation is corrupt
    /// (matrix/list mismatch, broken symmetry, wrong edge count).
    void check_invariants() const;

private:
    void require_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<bool> matrix_;  // row-major n*n
    std::vector<std::vector<int>> adj_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // to_original[new id] = id in the host graph
};

/// Subgraph induced by `vertices` (treated as a set), relabeled densely in
/// ascending order of the original ids.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Partition of [0, n) into connected components, each sorted ascending,
/// ordered by smallest contained vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Vertex sequence of an induced path: consecutive vertices adjacent,
/// non-consecutive ones not.
using ChordlessPath = std::vector<int>;

bool is_chordless_path(const Graph& g, const ChordlessPath& path);

/// All chordless paths (u, x, v). Requires u != v and {u,v} not an edge.
std::vector<ChordlessPath> chordless_p3_between(const Graph& g, int u, int v);

/// All chordless paths (u, x, y, v). Requires u != v and {u,v} not an edge.
std::vector<ChordlessPath> chordless_p4_between(const Graph& g, int u, int v);

/// Searches for an induced cycle with at least `min_len` vertices (min_len
/// >= 4) by depth-first extension of induced paths. Returns the first cycle
/// in a fixed deterministic order: smallest starting vertex first, neighbors
/// scanned ascending. Exponential in the worst case; intended as a
/// ground-truth oracle at small scale.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& g, int min_len);

}  // namespace wcg
