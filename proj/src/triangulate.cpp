#include "wcg/triangulate.hpp"

#include <optional>

namespace wcg {

namespace {

// Minimum degree among live vertices. HighestIndex scans downwards with a
// strict comparison, which keeps the largest index among the tied minima.
int pick_min_degree_vertex(const Graph& work, const std::vector<char>& alive,
                           TieBreak tie_break, SplitMix64* rng) {
    if (tie_break == TieBreak::HighestIndex) {
        int best = -1;
        for (int v = work.vertex_count() - 1; v >= 0; --v) {
            if (alive[v] && (best == -1 || work.degree(v) < work.degree(best))) {
                best = v;
            }
        }
        return best;
    }
    std::vector<int> minima;
    int best_degree = -1;
    for (int v = 0; v < work.vertex_count(); ++v) {
        if (!alive[v]) continue;
        int d = work.degree(v);
        if (best_degree == -1 || d < best_degree) {
            best_degree = d;
            minima.clear();
        }
        if (d == best_degree) minima.push_back(v);
    }
    return minima[rng->below(minima.size())];
}

}  // namespace

TriangulationResult mdv_triangulate(const Graph& g, TieBreak tie_break, Seed tie_seed) {
    TriangulationResult result{g, {}, {}};
    Graph work = g;
    const int n = g.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int live = n;

    // One pruning pass over the vertices that have degree 1 right now.
    // Vertices dropping to degree 1 later are simply picked up by minimum
    // degree selection, which never adds fill for them.
    std::vector<int> pruned;
    for (int v = 0; v < n; ++v) {
        if (work.degree(v) == 1) pruned.push_back(v);
    }
    for (int v : pruned) {
        for (int w : std::vector<int>(work.neighbors(v))) {
            work.remove_edge(v, w);
        }
        alive[v] = 0;
        --live;
        result.elimination_order.push_back(v);
    }

    std::optional<SplitMix64> rng;
    if (tie_break == TieBreak::SeededRandom) rng.emplace(tie_seed);

    while (live > 0) {
        int v = pick_min_degree_vertex(work, alive, tie_break, rng ? &*rng : nullptr);
        const std::vector<int> nbrs = work.neighbors(v);  // sorted copy
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (work.add_edge(nbrs[i], nbrs[j])) {
                    result.chordal.add_edge(nbrs[i], nbrs[j]);
                    result.fill_queue.emplace_back(nbrs[i], nbrs[j]);
                }
            }
        }
        for (int w : nbrs) {
            work.remove_edge(v, w);
        }
        alive[v] = 0;
        --live;
        result.elimination_order.push_back(v);
    }
    return result;
}

}  // namespace wcg
