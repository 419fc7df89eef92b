#include "wcg/pipeline.hpp"

#include <stdexcept>
#include <string>

#include "wcg/recognition.hpp"

namespace wcg {

namespace {

struct StageSeeds {
    Seed edge_count;
    Seed generation;
    Seed repair;
    Seed tie_break;
};

// One fixed stream per stage, derived from the master seed, so explicit-m
// runs and sampled-m runs agree on the downstream streams.
StageSeeds derive_streams(Seed master) {
    SplitMix64 rng(master);
    StageSeeds s;
    s.edge_count = rng.fork();
    s.generation = rng.fork();
    s.repair = rng.fork();
    s.tie_break = rng.fork();
    return s;
}

}  // namespace

PipelineResult transform_to_weakly_chordal(const Graph& input, Seed seed,
                                           const PipelineOptions& options) {
    const StageSeeds streams = derive_streams(seed);

    PipelineResult result;
    result.report.n = input.vertex_count();
    result.report.m_input = input.edge_count();
    result.report.seed = seed;

    auto repaired = make_connected(input, streams.repair);
    result.arbitrary = std::move(repaired.graph);
    result.report.repair_edges = static_cast<int>(repaired.added.size());

    if (is_weakly_chordal(result.arbitrary).weakly_chordal) {
        result.report.input_was_weakly_chordal = true;
        result.graph = result.arbitrary;
        result.chordal = result.arbitrary;
        return result;
    }

    auto tri = mdv_triangulate(result.arbitrary, options.tie_break, streams.tie_break);
    result.chordal = tri.chordal;
    result.fill_edges = tri.fill_queue;
    result.report.fill_added = static_cast<int>(tri.fill_queue.size());

    auto outcome = chordal_to_weakly_chordal(tri.chordal, tri.fill_queue, options.query_log);
    result.graph = std::move(outcome.final_graph);
    result.retained_fill = outcome.retained;
    result.report.fill_deleted = static_cast<int>(outcome.deleted.size());
    result.report.fill_retained = static_cast<int>(outcome.retained.size());
    result.report.rounds = outcome.rounds;
    return result;
}

PipelineResult generate_weakly_chordal(int n, std::optional<int> m, Seed seed,
                                       const PipelineOptions& options) {
    if (n < 2) {
        throw std::invalid_argument("generate_weakly_chordal: n must be at least 2");
    }
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m && (*m < 0 || *m > max_m)) {
        throw std::invalid_argument("generate_weakly_chordal: m out of range [0, " +
                                    std::to_string(max_m) + "]");
    }
    const StageSeeds streams = derive_streams(seed);
    const int edge_target = m ? *m : sample_edge_count(n, streams.edge_count);
    Graph g = gnm_random(n, edge_target, streams.generation);
    return transform_to_weakly_chordal(g, seed, options);
}

}  // namespace wcg
