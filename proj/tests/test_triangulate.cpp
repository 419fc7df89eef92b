#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "wcg/recognition.hpp"
#include "wcg/triangulate.hpp"

using namespace wcg;
using namespace wcg::test;

TEST_SUITE_BEGIN("triangulate");

namespace {

void check_result_invariants(const Graph& g, const TriangulationResult& tri) {
    // chordal = input plus exactly the fill queue, as a disjoint union
    CHECK(tri.chordal.vertex_count() == g.vertex_count());
    CHECK(tri.chordal.edge_count() ==
          g.edge_count() + static_cast<int>(tri.fill_queue.size()));
    for (Edge e : g.edges()) CHECK(tri.chordal.has_edge(e));
    std::set<Edge> fills(tri.fill_queue.begin(), tri.fill_queue.end());
    CHECK(fills.size() == tri.fill_queue.size());  // no duplicates
    for (Edge e : fills) {
        CHECK(tri.chordal.has_edge(e));
        CHECK_FALSE(g.has_edge(e));
    }
}

}  // namespace

TEST_CASE("already chordal inputs need no fill") {
    for (const Graph& g : {complete_graph(4), path_graph(6), prism_graph(),
                           Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})}) {
        if (!is_chordal(g)) continue;  // prism is not; skip it here
        auto tri = mdv_triangulate(g);
        CHECK(tri.fill_queue.empty());
        CHECK(tri.chordal == g);
    }
}

TEST_CASE("six-vertex example adds exactly the fill {3,4}") {
    Graph g = single_fill_graph();
    auto tri = mdv_triangulate(g);
    REQUIRE(tri.fill_queue.size() == 1);
    CHECK(tri.fill_queue[0] == Edge(3, 4));
    CHECK(is_chordal(tri.chordal));
    check_result_invariants(g, tri);
    // the degree-2 tie between 1 and 5 goes to the higher index
    REQUIRE(tri.elimination_order.size() >= 2);
    CHECK(tri.elimination_order[0] == 5);
    CHECK(tri.elimination_order[1] == 1);
}

TEST_CASE("triangulating the 5-cycle needs exactly two chords") {
    Graph c5 = cycle_graph(5);
    auto tri = mdv_triangulate(c5);
    CHECK(tri.fill_queue.size() == 2);
    CHECK(is_chordal(tri.chordal));
    check_result_invariants(c5, tri);
    CHECK(minimum_fill_size(c5) == 2);  // brute force over chord subsets
}

TEST_CASE("random graphs: invariants, chordality, idempotence") {
    SplitMix64 rng(Seed{60001});
    for (int trial = 0; trial < 250; ++trial) {
        Graph g = random_gnm(rng, 1, 12);
        auto tri = mdv_triangulate(g);
        check_result_invariants(g, tri);
        CHECK(is_chordal(tri.chordal));
        CHECK(tri.elimination_order.size() == static_cast<std::size_t>(g.vertex_count()));

        auto again = mdv_triangulate(tri.chordal);
        CHECK(again.fill_queue.empty());
        CHECK(again.chordal == tri.chordal);
    }
}

TEST_CASE("pendant vertices never change the fill queue") {
    SplitMix64 rng(Seed{60002});
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_gnm(rng, 2, 10);
        auto base = mdv_triangulate(g);

        int extra = 1 + static_cast<int>(rng.below(3));
        Graph with_pendants(g.vertex_count() + extra);
        for (Edge e : g.edges()) with_pendants.add_edge(e);
        for (int k = 0; k < extra; ++k) {
            int host = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
            with_pendants.add_edge(g.vertex_count() + k, host);
        }
        auto padded = mdv_triangulate(with_pendants);
        CHECK(padded.fill_queue == base.fill_queue);
    }
}

TEST_CASE("seeded random tie-break stays valid and deterministic") {
    SplitMix64 rng(Seed{60003});
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_gnm(rng, 2, 10);
        Seed tie = rng.fork();
        auto a = mdv_triangulate(g, TieBreak::SeededRandom, tie);
        auto b = mdv_triangulate(g, TieBreak::SeededRandom, tie);
        CHECK(a.chordal == b.chordal);
        CHECK(a.fill_queue == b.fill_queue);
        CHECK(a.elimination_order == b.elimination_order);
        check_result_invariants(g, a);
        CHECK(is_chordal(a.chordal));
    }
}

TEST_SUITE_END();
