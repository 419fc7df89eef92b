#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "wcg/graph.hpp"
#include "wcg/randgen.hpp"

using namespace wcg;
using namespace wcg::test;

TEST_SUITE_BEGIN("randgen");

TEST_CASE("forced extremes of G(n,m)") {
    for (std::uint64_t s : {1ull, 99ull, 123456789ull}) {
        CHECK(gnm_random(4, 6, Seed{s}) == complete_graph(4));
        CHECK(gnm_random(5, 0, Seed{s}).edge_count() == 0);
    }
    CHECK(gnm_random(1, 0, Seed{7}).vertex_count() == 1);
}

TEST_CASE("same seed reproduces the same graph") {
    Graph a = gnm_random(6, 8, Seed{424242});
    Graph b = gnm_random(6, 8, Seed{424242});
    CHECK(a == b);
    CHECK(a.edge_count() == 8);
}

TEST_CASE("exact edge count and valid structure across many draws") {
    SplitMix64 rng(Seed{314159});
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        long long slots = static_cast<long long>(n) * (n - 1) / 2;
        int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(slots + 1)));
        Graph g = gnm_random(n, m, rng.fork());
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == m);
        g.check_invariants();  // symmetry, no loops, consistent counts
    }
}

TEST_CASE("gnm parameter validation") {
    CHECK_THROWS_AS(gnm_random(0, 0, Seed{1}), std::invalid_argument);
    CHECK_THROWS_AS(gnm_random(4, 7, Seed{1}), std::invalid_argument);
    CHECK_THROWS_AS(gnm_random(4, -1, Seed{1}), std::invalid_argument);
}

TEST_CASE("edge count sampling range") {
    CHECK(sample_edge_count(2, Seed{9}) == 1);  // range collapses to [1,1]
    for (std::uint64_t s = 0; s < 50; ++s) {
        int m = sample_edge_count(3, Seed{s});
        CHECK(m >= 2);
        CHECK(m <= 3);
    }
    CHECK_THROWS_AS(sample_edge_count(1, Seed{1}), std::invalid_argument);
}

TEST_CASE("edge count sampling mean for n=10") {
    SplitMix64 seeder(Seed{271828});
    double total = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        int m = sample_edge_count(10, seeder.fork());
        CHECK(m >= 9);
        CHECK(m <= 45);
        total += m;
    }
    double mean = total / draws;
    CHECK(mean > 27.0 * 0.98);
    CHECK(mean < 27.0 * 1.02);
}

TEST_CASE("connectivity repair on fixed graphs") {
    Graph c5 = cycle_graph(5);
    auto same = make_connected(c5, Seed{3});
    CHECK(same.graph == c5);
    CHECK(same.added.empty());

    Graph k3_isolated(4, {{0, 1}, {1, 2}, {0, 2}});
    auto joined = make_connected(k3_isolated, Seed{3});
    CHECK(joined.added.size() == 1);
    CHECK(connected_components(joined.graph).size() == 1);

    Graph singletons(3);
    auto path = make_connected(singletons, Seed{3});
    CHECK(path.added.size() == 2);
    CHECK(path.graph.edge_count() == 2);
    CHECK(connected_components(path.graph).size() == 1);
}

TEST_CASE("repair only ever adds edges") {
    SplitMix64 rng(Seed{55});
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_gnm(rng, 1, 12);
        auto repaired = make_connected(g, rng.fork());
        CHECK(connected_components(repaired.graph).size() == 1);
        CHECK(repaired.graph.edge_count() ==
              g.edge_count() + static_cast<int>(repaired.added.size()));
        for (Edge e : g.edges()) CHECK(repaired.graph.has_edge(e));
        CHECK(static_cast<int>(repaired.added.size()) ==
              static_cast<int>(connected_components(g).size()) - 1);
    }
}

TEST_SUITE_END();
