#include "doctest.h"
#include "test_util.hpp"
#include "wcg/differential.hpp"
#include "wcg/io.hpp"
#include "wcg/pipeline.hpp"
#include "wcg/recognition.hpp"

using namespace wcg;
using namespace wcg::test;

TEST_SUITE_BEGIN("pipeline");

namespace {

void check_report_arithmetic(const PipelineResult& r) {
    CHECK(r.report.fill_added == r.report.fill_deleted + r.report.fill_retained);
    CHECK(r.graph.edge_count() ==
          r.report.m_input + r.report.repair_edges + r.report.fill_retained);
    CHECK(static_cast<int>(r.retained_fill.size()) == r.report.fill_retained);
    CHECK(static_cast<int>(r.fill_edges.size()) == r.report.fill_added);
}

}  // namespace

TEST_CASE("complete graph exits early") {
    auto r = generate_weakly_chordal(4, 6, Seed{11});
    CHECK(r.graph == complete_graph(4));
    CHECK(r.report.input_was_weakly_chordal);
    CHECK(r.report.fill_added == 0);
    CHECK(r.report.rounds == 0);
    CHECK(r.chordal == r.arbitrary);
    check_report_arithmetic(r);
}

TEST_CASE("apex fixture runs the whole pipeline with one retained fill") {
    auto r = transform_to_weakly_chordal(hole_demo_graph(), Seed{500});
    CHECK(r.report.n == 6);
    CHECK(r.report.m_input == 8);
    CHECK(r.report.repair_edges == 0);
    CHECK_FALSE(r.report.input_was_weakly_chordal);
    CHECK(r.report.fill_added == 2);
    CHECK(r.report.fill_deleted == 1);
    CHECK(r.report.fill_retained == 1);
    CHECK(r.retained_fill == std::vector<Edge>{Edge(0, 3)});
    check_report_arithmetic(r);
    CHECK(is_weakly_chordal(r.graph).weakly_chordal);
}

TEST_CASE("outputs pass the oracle and reports stay consistent") {
    SplitMix64 rng(Seed{7201});
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng.below(9));
        auto r = generate_weakly_chordal(n, std::nullopt, rng.fork());
        CHECK(is_weakly_chordal(r.graph).weakly_chordal);
        CHECK(r.report.n == n);
        check_report_arithmetic(r);
        if (r.report.fill_added > 0) CHECK(r.report.rounds >= 1);
    }
}

TEST_CASE("same seed, same graph, same report") {
    for (std::uint64_t s : {1ull, 2ull, 77ull, 123456ull}) {
        auto a = generate_weakly_chordal(9, std::nullopt, Seed{s});
        auto b = generate_weakly_chordal(9, std::nullopt, Seed{s});
        CHECK(a.graph == b.graph);
        CHECK(a.report == b.report);
        CHECK(write_edge_list(a.graph) == write_edge_list(b.graph));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(generate_weakly_chordal(1, std::nullopt, Seed{1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_weakly_chordal(4, 7, Seed{1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_weakly_chordal(4, -1, Seed{1}), std::invalid_argument);
}

TEST_CASE("random tie-break option still yields sound output") {
    PipelineOptions options;
    options.tie_break = TieBreak::SeededRandom;
    SplitMix64 rng(Seed{7777});
    for (int trial = 0; trial < 40; ++trial) {
        auto r = generate_weakly_chordal(8, std::nullopt, rng.fork(), options);
        CHECK(is_weakly_chordal(r.graph).weakly_chordal);
        check_report_arithmetic(r);
    }
}

TEST_CASE("differential harness finds no mismatch at tiny sizes") {
    CHECK(difftest_exhaustive(4).empty());
    CHECK(difftest_random(6, 25, Seed{31}).empty());
}

TEST_SUITE_END();
