#include "wcg/randgen.hpp"

#include <stdexcept>

namespace wcg {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("SplitMix64::below: bound must be positive");
    }
    // Reject draws from the final partial bucket so the result is unbiased.
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

Graph gnm_random(int n, int m, Seed seed) {
    if (n < 1) {
        throw std::invalid_argument("gnm_random: n must be at least 1");
    }
    const long long slots = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > slots) {
        throw std::invalid_argument("gnm_random: m out of range [0, " +
                                    std::to_string(slots) + "]");
    }
    Graph g(n);
    SplitMix64 rng(seed);
    long long needed = m;
    long long remaining = slots;
    for (int u = 0; u < n && needed > 0; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // Select with probability needed/remaining (Algorithm S step).
            if (rng.below(static_cast<std::uint64_t>(remaining)) <
                static_cast<std::uint64_t>(needed)) {
                g.add_edge(u, v);
                --needed;
            }
            --remaining;
            if (needed == 0) break;
        }
    }
    return g;
}

int sample_edge_count(int n, Seed seed) {
    if (n < 2) {
        throw std::invalid_argument("sample_edge_count: n must be at least 2");
    }
    const long long lo = n - 1;
    const long long hi = static_cast<long long>(n) * (n - 1) / 2;
    SplitMix64 rng(seed);
    return static_cast<int>(lo + static_cast<long long>(rng.below(
                                     static_cast<std::uint64_t>(hi - lo + 1))));
}

ConnectivityRepair make_connected(const Graph& g, Seed seed) {
    ConnectivityRepair result{g, {}};
    const auto components = connected_components(g);
    SplitMix64 rng(seed);
    for (std::size_t k = 0; k + 1 < components.size(); ++k) {
        int a = components[k][rng.below(components[k].size())];
        int b = components[k + 1][rng.below(components[k + 1].size())];
        result.graph.add_edge(a, b);
        result.added.emplace_back(a, b);
    }
    return result;
}

}  // namespace wcg
