#pragma once

// Seeded random graph generation in the G(n,m) model plus connectivity
// repair. All randomness flows through SplitMix64 so identical seeds give
// bit-identical graphs on every platform.

#include <cstdint>
#include <vector>

#include "wcg/graph.hpp"

namespace wcg {

struct Seed {
    std::uint64_t value = 0;
    friend bool operator==(const Seed&, const Seed&) = default;
};

/// SplitMix64 (Steele, Lea & Flood's splittable generator, reference
/// constants). Pure 64-bit integer recurrence, hence portable.
class SplitMix64 {
public:
    explicit SplitMix64(Seed seed) : state_(seed.value) {}

    std::uint64_t next();

    /// Uniform draw from [0, bound); unbiased via rejection sampling.
    std::uint64_t below(std::uint64_t bound);

    /// Seed for an independent derived stream.
    Seed fork() { return Seed{next()}; }

private:
    std::uint64_t state_;
};

/// Random simple graph with exactly n vertices and m edges. Edge slots are
/// visited in lexicographic order and chosen by selection sampling (Knuth's
/// Algorithm S): a slot is kept with probability (still needed)/(slots left).
Graph gnm_random(int n, int m, Seed seed);

/// Uniform edge count in [n-1, n(n-1)/2]; requires n >= 2.
int sample_edge_count(int n, Seed seed);

struct ConnectivityRepair {
    Graph graph;
    std::vector<Edge> added;
};

/// Connects the graph by adding one edge between consecutive components in
/// discovery order, joining uniformly chosen endpoints. Adds exactly
/// (#components - 1) edges and never removes any.
ConnectivityRepair make_connected(const Graph& g, Seed seed);

}  // namespace wcg
