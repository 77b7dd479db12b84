#include <gtest/gtest.h>

#include <cmath>

#include "alp/heuristics.hpp"
#include "support/corpus.hpp"

namespace alp {
namespace {

using testing::floyd_warshall;
using testing::path_graph;

constexpr OpCounters kCross{9, 2, 1, 4};
constexpr OpCounters kShared{8, 0, 0, 5};

struct P6 {
    Graph g = path_graph(6);
    LandmarkSet ends{{0, 5}, 6};
    AltEmbedding alt = build_alt_embedding(g, ends);
    DistributedEmbedding alp = build_distributed_embedding(g, ends);
};

TEST(AltH, PathExamples) {
    P6 p;
    const auto e = alt_h(p.alt, 1, 4);
    EXPECT_EQ(e.value, 3.0);
    EXPECT_EQ(e.counters, (OpCounters{2, 0, 0, 2}));
    EXPECT_EQ(alt_h(p.alt, 3, 3).value, 0.0);

    const auto single = build_alt_embedding(p.g, LandmarkSet({0}, 6));
    const auto s = alt_h(single, 2, 3);
    EXPECT_EQ(s.value, 1.0);
    EXPECT_EQ(s.counters, (OpCounters{1, 0, 0, 1}));
}

TEST(AltH, BestLandmarkTiesToSmallestIndex) {
    P6 p;
    EXPECT_EQ(alt_best_landmark(p.alt, 1, 4), 0u);
    const auto grid = generate_grid(3, 3);
    const auto e = build_alt_embedding(grid, LandmarkSet({4, 0}, 9));
    // from the center nothing separates 1 and 3; from corner 0 neither
    EXPECT_EQ(alt_best_landmark(e, 1, 3), 0u);
    EXPECT_EQ(alt_best_landmark(e, 0, 8), 1u);
}

TEST(AlpComponents, CrossPartitionExample) {
    P6 p;
    const auto c = alp_components(p.alp, 1, 4);
    EXPECT_EQ(c[0], 3.0);
    EXPECT_EQ(c[1], -5.0);
    EXPECT_EQ(c[2], 3.0);
    EXPECT_FALSE(c[3].has_value());
    EXPECT_FALSE(c[4].has_value());
    EXPECT_EQ(c[5], 3.0);

    const auto no_ptolemy = alp_components(p.alp, 1, 4, false);
    EXPECT_FALSE(no_ptolemy[5].has_value());
}

TEST(AlpComponents, SharedLandmarkExample) {
    P6 p;
    // l = 0: a = 1, b = d(0,0) = 0, c = 2
    const auto c = alp_components(p.alp, 1, 2);
    EXPECT_EQ(c[0], -1.0);
    EXPECT_EQ(c[1], 1.0);
    EXPECT_EQ(c[2], 1.0);
    EXPECT_EQ(c[3], 1.0);
    EXPECT_EQ(c[4], 1.0);
    EXPECT_FALSE(c[5].has_value());

    EXPECT_EQ(alp_components(p.alp, 2, 2)[3], 0.0);
}

TEST(AlpDualH, CountersMatchStatedTotals) {
    P6 p;
    const auto cross = alp_dual_h(p.alp, 1, 4);
    EXPECT_EQ(cross.value, 3.0);
    EXPECT_EQ(cross.counters, kCross);
    EXPECT_EQ(cross.component(6), 3.0);

    const auto shared = alp_dual_h(p.alp, 1, 2);
    EXPECT_EQ(shared.value, 1.0);
    EXPECT_EQ(shared.counters, kShared);
}

TEST(AlpDualH, ClampsNegativeComponents) {
    // 0 - [1] - [2] - 3: a = b = c = 1, so every component is -1.
    const Graph g = path_graph(4);
    const auto e = build_distributed_embedding(g, LandmarkSet({1, 2}, 4));
    const auto h = alp_dual_h(e, 0, 3);
    for (int i : {1, 2, 3, 6}) EXPECT_EQ(h.component(i), -1.0) << i;
    EXPECT_EQ(h.value, 0.0);
}

TEST(AlpDualH, OptimizedModeKeepsValues) {
    P6 p;
    const AlpConfig fast{CountingMode::optimized, true};
    const auto cross = alp_dual_h(p.alp, 1, 4, fast);
    EXPECT_EQ(cross.value, 3.0);
    EXPECT_EQ(cross.counters, (OpCounters{7, 2, 1, 4}));
    const auto shared = alp_dual_h(p.alp, 1, 2, fast);
    EXPECT_EQ(shared.value, 1.0);
    EXPECT_EQ(shared.counters, (OpCounters{1, 0, 0, 1}));
}

TEST(AlpDualH, WithoutPtolemyCounts) {
    P6 p;
    const AlpConfig cfg{CountingMode::paper_faithful, false};
    const auto cross = alp_dual_h(p.alp, 1, 4, cfg);
    EXPECT_EQ(cross.value, 3.0);
    EXPECT_FALSE(cross.component(6).has_value());
    EXPECT_EQ(cross.counters, (OpCounters{6, 0, 0, 3}));
}

TEST(ClassifyScenario, Examples) {
    P6 p;
    EXPECT_EQ(classify_scenario(p.alt, p.alp, 1, 2), Scenario::s3);
    // both landmarks give 3; the tie goes to index 0, which owns v
    EXPECT_EQ(classify_scenario(p.alt, p.alp, 1, 4), Scenario::s1);

    const LandmarkSet reversed({5, 0}, 6);
    const auto alt_r = build_alt_embedding(p.g, reversed);
    const auto alp_r = build_distributed_embedding(p.g, reversed);
    EXPECT_EQ(classify_scenario(alt_r, alp_r, 1, 4), Scenario::s2);
    EXPECT_EQ(classify_scenario(alt_r, alp_r, 1, 2), Scenario::s4);

    const Graph p7 = path_graph(7);
    const LandmarkSet three({6, 0, 3}, 7);
    EXPECT_EQ(classify_scenario(build_alt_embedding(p7, three), build_distributed_embedding(p7, three), 1, 2),
              Scenario::s5);

    const LandmarkSet one({2}, 6);
    const auto alt1 = build_alt_embedding(p.g, one);
    const auto alp1 = build_distributed_embedding(p.g, one);
    for (VertexId v = 0; v < 6; ++v) {
        for (VertexId t = 0; t < 6; ++t) EXPECT_EQ(classify_scenario(alt1, alp1, v, t), Scenario::s3);
    }
}

TEST(ClassifyScenario, RejectsMismatchedLandmarks) {
    P6 p;
    const auto other = build_distributed_embedding(p.g, LandmarkSet({0, 4}, 6));
    EXPECT_THROW(classify_scenario(p.alt, other, 1, 4), std::invalid_argument);
}

TEST(Scenario, Names) {
    EXPECT_STREQ(to_string(Scenario::s1), "S1");
    EXPECT_STREQ(to_string(Scenario::s5), "S5");
    EXPECT_EQ(scenario_index(Scenario::s4), 3);
}

TEST(Functors, ForwardTarget) {
    P6 p;
    EXPECT_EQ(AltHeuristic(p.alt, 4)(1).value, 3.0);
    EXPECT_EQ(AlpHeuristic(p.alp, 4)(1).counters, kCross);
}

// Corpus sweep over 40 graphs. Acceptance runs the full 100.
class HeuristicCorpus : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(HeuristicCorpus, Invariants) {
    auto c = testing::make_corpus_case(GetParam());
    if (GetParam() % 5 == 4) c.graph = testing::reweighted(c.graph, GetParam(), 6);
    const Graph& g = c.graph;
    const auto d = floyd_warshall(g);
    const auto alt = build_alt_embedding(g, c.landmarks);
    const auto alp = build_distributed_embedding(g, c.landmarks);
    const std::uint64_t k = c.landmarks.size();
    const AlpConfig fast{CountingMode::optimized, true};

    for (const auto& [v, t] : testing::evaluation_pairs(g.vertex_count(), GetParam(), 800)) {
        const auto a = alt_h(alt, v, t);
        const auto p = alp_dual_h(alp, v, t);
        ASSERT_LE(a.value, d[v][t]);
        ASSERT_LE(p.value, d[v][t]) << "v=" << v << " t=" << t;
        ASSERT_GE(p.value, 0.0);
        ASSERT_TRUE(std::isfinite(p.value));
        ASSERT_EQ(a.counters, (OpCounters{k, 0, 0, k}));

        const auto l1 = alp.owner[v];
        const auto l2 = alp.owner[t];
        if (l1 == l2) {
            ASSERT_EQ(p.counters, kShared);
            ASSERT_EQ(p.value, std::abs(alp.dist_to_owner[v] - alp.dist_to_owner[t]));
        } else {
            ASSERT_EQ(p.counters, kCross);
            // the Ptolemy term never beats the best triangle term
            const double tri = std::max({*p.component(1), *p.component(2), *p.component(3)});
            ASSERT_LE(*p.component(6), tri + 1e-12);
        }
        ASSERT_EQ(alp_dual_h(alp, v, t, fast).value, p.value);

        const auto s = classify_scenario(alt, alp, v, t);
        if (s == Scenario::s3) ASSERT_EQ(p.value, a.value);
        if (s == Scenario::s4) ASSERT_LE(p.value, a.value);
        // same landmark set: the full table always dominates
        ASSERT_LE(p.value, a.value);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, HeuristicCorpus, ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
}  // namespace alp
