#include "doctest.h"
#include "test_util.hpp"
#include "wcg/differential.hpp"
#include "wcg/recognition.hpp"
#include "wcg/triangulate.hpp"

using namespace wcg;
using namespace wcg::test;

TEST_SUITE_BEGIN("recognition");

TEST_CASE("the 5-cycle is rejected with a hole in the graph") {
    auto verdict = is_weakly_chordal(cycle_graph(5));
    CHECK_FALSE(verdict.weakly_chordal);
    REQUIRE(verdict.hole.has_value());
    CHECK(verdict.hole_location == HoleLocation::InGraph);
    CHECK(verdict.hole->size() == 5);
}

TEST_CASE("chordal graphs are weakly chordal") {
    CHECK(is_weakly_chordal(complete_graph(5)).weakly_chordal);
    CHECK(is_weakly_chordal(path_graph(7)).weakly_chordal);
    Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(is_weakly_chordal(star).weakly_chordal);
}

TEST_CASE("complement holes are found and tagged") {
    Graph co_c7 = complement(cycle_graph(7));
    auto verdict = is_weakly_chordal(co_c7);
    CHECK_FALSE(verdict.weakly_chordal);
    REQUIRE(verdict.hole.has_value());
    CHECK(verdict.hole_location == HoleLocation::InComplement);
    CHECK(verdict.hole->size() == 7);
}

TEST_CASE("chordality on fixed graphs") {
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK(is_chordal(complete_graph(4)));

    Graph filled = single_fill_graph();
    filled.add_edge(3, 4);
    CHECK(is_chordal(filled));
    CHECK(is_chordal_peo(filled));  // second, independent method
    CHECK_FALSE(is_chordal(single_fill_graph()));
}

TEST_CASE("chordality agrees with simplicial elimination on all small graphs") {
    for (int n = 1; n <= 6; ++n) {
        for_each_graph(n, [](const Graph& g) {
            CHECK(is_chordal(g) == is_chordal_peo(g));
        });
    }
}

TEST_CASE("weak chordality is self-complementary on all small graphs") {
    for (int n = 1; n <= 6; ++n) {
        for_each_graph(n, [](const Graph& g) {
            CHECK(is_weakly_chordal(g).weakly_chordal ==
                  is_weakly_chordal(complement(g)).weakly_chordal);
        });
    }
}

TEST_CASE("triangulation outputs pass weak chordality") {
    SplitMix64 rng(Seed{808});
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_gnm(rng, 2, 10);
        auto tri = mdv_triangulate(g);
        CHECK(is_weakly_chordal(tri.chordal).weakly_chordal);
    }
}

TEST_SUITE_END();
