#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/sunflower.hpp"

using namespace sunflower;

TEST(SmallKernel, Examples) {
    const auto a = small_kernel(7, 3, 1, 3);
    EXPECT_EQ(small_kernel_b_size(1, 3), 2);
    EXPECT_EQ(a.edge_count(), 5U);
    EXPECT_FALSE(find_sunflower(a, 1, 3));

    const auto b = small_kernel(6, 3, 1, 2);
    EXPECT_EQ(b.edge_count(), 4U);
    EXPECT_FALSE(find_sunflower(b, 1, 2));
}

TEST(SmallKernel, TightVertexCountIsFreeForEveryK) {
    // n = r + t + 1 with s = t + 1: all edges contain B, so any two meet in > t.
    for (int r = 1; r <= 5; ++r) {
        for (int t = 0; 2 * t + 1 <= r; ++t) {
            const auto h = small_kernel(r + t + 1, r, t, 2);
            for (std::size_t k = 2; k <= 5; ++k) EXPECT_FALSE(find_sunflower(h, t, k));
            for (std::size_t i = 0; i < h.edge_count(); ++i)
                for (std::size_t j = i + 1; j < h.edge_count(); ++j)
                    EXPECT_GT(h.edge(i).intersect(h.edge(j)).size(), static_cast<std::size_t>(t));
        }
    }
}

TEST(SmallKernel, NamesViolatedInequality) {
    try {
        small_kernel(10, 3, 2, 2);
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("r >= 2t+1"), std::string::npos) << e.what();
    }
    try {
        small_kernel(3, 3, 1, 4);
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("n >= s + (r-t-1)"), std::string::npos) << e.what();
    }
    EXPECT_THROW(small_kernel(10, 3, 1, 1), InvalidArgument);
}

TEST(SmallKernel, GridCountsAndFreeness) {
    for (int n = 1; n <= 14; ++n) {
        for (int r = 1; r <= 5; ++r) {
            for (int t = 0; 2 * t + 1 <= r; ++t) {
                for (std::size_t k = 2; k <= 4; ++k) {
                    const int s = small_kernel_b_size(t, k);
                    if (n < s + r - t - 1) continue;
                    const auto h = small_kernel(n, r, t, k);
                    EXPECT_EQ(BigInt(h.edge_count()), binomial(n - s, r - t - 1) * binomial(s, t + 1));
                    EXPECT_EQ(BigInt(h.edge_count()), small_kernel_edge_count(n, r, t, k));
                    EXPECT_FALSE(find_sunflower(h, t, k));
                    if (n <= 9) EXPECT_FALSE(oracle::has_sunflower(h, t, k));
                }
            }
        }
    }
}

TEST(StageCount, Examples) {
    EXPECT_EQ(stage_budget(3, 2, 2), 3);
    EXPECT_EQ(stage_count(20, 3, 2, 2), std::optional<std::uint64_t>(7));
    // s = (4-3)*2 + 3 - 1 = 4, so floor(10^6 / (2*4*4^3)).
    EXPECT_EQ(stage_count(100, 4, 3, 2), std::optional<std::uint64_t>(1953));
    EXPECT_FALSE(stage_count(20, 1, 0, 2).has_value());
}

TEST(LargeKernel, Example) {
    const auto res = large_kernel(30, 3, 2, 3, 1);
    EXPECT_EQ(res.plan.s, 4);
    EXPECT_EQ(res.plan.stages, 9U);
    EXPECT_EQ(res.stages.size(), 9U);
    EXPECT_LE(max_cross_stage_intersection(res), 1U);
    EXPECT_FALSE(find_sunflower(res.graph, 2, 3));
    EXPECT_EQ(res.stage_of_edge.size(), res.graph.edge_count());
}

TEST(LargeKernel, SingleStageIsFree) {
    LargeKernelOptions opts;
    opts.max_stages = 1;
    const auto res = large_kernel(30, 3, 2, 3, 5, opts);
    ASSERT_EQ(res.stages.size(), 1U);
    EXPECT_LE(res.stages[0].vertices.size(), 4U);
    for (const auto& e : res.graph.edges()) EXPECT_TRUE(e.is_subset_of(res.stages[0].vertices));
    EXPECT_FALSE(find_sunflower(res.graph, 2, 3));
}

TEST(LargeKernel, SeedReproducible) {
    EXPECT_EQ(large_kernel(40, 4, 2, 2, 9).graph, large_kernel(40, 4, 2, 2, 9).graph);
    EXPECT_NE(large_kernel(40, 4, 2, 2, 9).graph, large_kernel(40, 4, 2, 2, 10).graph);
}

TEST(LargeKernel, StageYieldAndCrossStageBound) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        for (auto [n, r, t, k] : {std::tuple{18, 2, 1, 2}, std::tuple{27, 3, 2, 3}, std::tuple{40, 4, 2, 2},
                                  std::tuple{48, 4, 3, 3}}) {
            const auto res = large_kernel(n, r, t, static_cast<std::size_t>(k), seed);
            const auto need = (binomial_u64(res.plan.s, r) + 3) / 4;
            for (const auto& st : res.stages) EXPECT_GE(st.qualifying, need);
            EXPECT_LE(max_cross_stage_intersection(res), static_cast<std::size_t>(t - 1));
            EXPECT_GE(res.graph.edge_count(), res.stages.size() * need);
            EXPECT_FALSE(find_sunflower(res.graph, t, static_cast<std::size_t>(k)));
        }
    }
}

TEST(LargeKernel, RejectsBadParameters) {
    EXPECT_THROW(large_kernel(30, 3, 1, 2, 0), InvalidArgument);  // 2t < r
    EXPECT_THROW(large_kernel(10, 3, 2, 3, 0), InvalidArgument);  // k r^2 > n
    EXPECT_THROW(large_kernel(30, 3, 2, 1, 0), InvalidArgument);
}

TEST(LargeKernel, FreeUnderNaiveOracleAtSmallN) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto res = large_kernel(8, 2, 1, 2, seed);
        EXPECT_FALSE(oracle::has_sunflower(res.graph, 1, 2));
    }
}

TEST(CliqueBound, Examples) {
    const auto a = clique_bound(10, 3, 1, 2);
    EXPECT_EQ(a.edge_count(), 4U);
    EXPECT_FALSE(find_sunflower(a, 1, 2));
    EXPECT_EQ(clique_bound(3, 3, 2, 2).edge_count(), 1U);
    const auto c = clique_bound(10, 2, 0, 3);
    EXPECT_EQ(c.edge_count(), 10U);
    EXPECT_EQ(oracle::max_matching(oracle::masks(c)), 2U);
    EXPECT_FALSE(find_sunflower(c, 0, 3));
}
