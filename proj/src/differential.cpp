#include "wcg/differential.hpp"

#include <stdexcept>

#include "wcg/pipeline.hpp"
#include "wcg/recognition.hpp"
#include "wcg/wcd_edit.hpp"

namespace wcg {

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 7) {
        throw std::invalid_argument("for_each_graph: supported for 0 <= n <= 7");
    }
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    const std::uint64_t total = 1ull << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        }
        fn(g);
    }
}

namespace {

void probe_all_edges(const Graph& g, std::vector<DetectorMismatch>& out) {
    Graph scratch = g;
    for (Edge e : g.edges()) {
        bool detector = can_delete(scratch, e).ok;
        Graph without = g;
        without.remove_edge(e);
        bool oracle = is_weakly_chordal(without).weakly_chordal;
        if (detector != oracle) {
            out.push_back({g, e, detector, oracle});
        }
    }
}

}  // namespace

std::vector<DetectorMismatch> difftest_exhaustive(int n) {
    std::vector<DetectorMismatch> out;
    for_each_graph(n, [&](const Graph& g) {
        if (!is_weakly_chordal(g).weakly_chordal) return;
        probe_all_edges(g, out);
    });
    return out;
}

std::vector<DetectorMismatch> difftest_random(int n, int trials, Seed seed) {
    std::vector<DetectorMismatch> out;
    SplitMix64 streams(seed);
    for (int i = 0; i < trials; ++i) {
        auto result = generate_weakly_chordal(n, std::nullopt, streams.fork());
        probe_all_edges(result.graph, out);
    }
    return out;
}

}  // namespace wcg
