#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/sunflower.hpp"
#include "sunflower/turan.hpp"

using namespace sunflower;

TEST(NaiveOracle, KnownValues) {
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(oracle::naive_turan(n, 2, 1, 2), static_cast<std::size_t>(n / 2));
    for (int n = 3; n <= 6; ++n) EXPECT_EQ(oracle::naive_turan(n, 2, 0, 2), static_cast<std::size_t>(std::max(3, n - 1)));
    EXPECT_EQ(oracle::naive_turan(4, 3, 2, 2), 1U);
}

TEST(ExactTuran, MatchingNumber) {
    for (int n = 2; n <= 8; ++n) {
        const auto res = exact_turan(n, 2, 1, 2);
        ASSERT_EQ(res.status, TuranStatus::exact);
        EXPECT_EQ(res.exact_max, static_cast<std::size_t>(n / 2));
        EXPECT_EQ(res.lower_witness.edge_count(), *res.exact_max);
        EXPECT_FALSE(find_sunflower(res.lower_witness, 1, 2));
    }
}

TEST(ExactTuran, IntersectingGraphs) {
    for (int n = 3; n <= 7; ++n) {
        const auto res = exact_turan(n, 2, 0, 2);
        EXPECT_EQ(res.exact_max, static_cast<std::size_t>(std::max(3, n - 1)));
        EXPECT_FALSE(find_sunflower(res.lower_witness, 0, 2));
    }
}

TEST(ExactTuran, TriplesOnFour) {
    const auto res = exact_turan(4, 3, 2, 2);
    EXPECT_EQ(res.exact_max, 1U);
}

TEST(ExactTuran, AgreesWithNaiveOracle) {
    for (int n = 2; n <= 6; ++n) {
        for (int r = 1; r <= std::min(n, 4); ++r) {
            if (binomial_u64(n, r) > 15) continue;
            for (int t = 0; t < r; ++t) {
                for (std::size_t k = 2; k <= 3; ++k) {
                    const auto res = exact_turan(n, r, t, k);
                    ASSERT_EQ(res.status, TuranStatus::exact);
                    EXPECT_EQ(*res.exact_max, oracle::naive_turan(n, r, t, k))
                        << "n=" << n << " r=" << r << " t=" << t << " k=" << k;
                    EXPECT_FALSE(oracle::has_sunflower(res.lower_witness, t, k));
                }
            }
        }
    }
}

TEST(ExactTuran, EdgeCases) {
    EXPECT_EQ(exact_turan(2, 3, 1, 2).exact_max, 0U);
    EXPECT_THROW(exact_turan(9, 2, 1, 2), InvalidArgument);  // 36 > 28
    TuranOptions wide;
    wide.ceiling = 40;
    EXPECT_EQ(exact_turan(9, 2, 1, 2, wide).exact_max, 4U);
    EXPECT_THROW(exact_turan(5, 2, 2, 2), InvalidArgument);
    EXPECT_THROW(exact_turan(5, 2, 1, 1), InvalidArgument);
}

TEST(ExactTuran, BudgetExhaustion) {
    TuranOptions tight;
    tight.node_budget = 3;
    const auto res = exact_turan(7, 2, 0, 3, tight);
    EXPECT_EQ(res.status, TuranStatus::budget_exhausted);
    EXPECT_FALSE(res.exact_max);
    EXPECT_FALSE(find_sunflower(res.lower_witness, 0, 3));
    EXPECT_GE(res.lower_witness.edge_count(), 1U);
}

TEST(ExactTuran, ConstructionsSandwich) {
    for (int n = 3; n <= 7; ++n) {
        for (int r = 2; r <= 3; ++r) {
            if (binomial_u64(n, r) > 28) continue;
            for (int t = 0; t < r; ++t) {
                for (std::size_t k = 2; k <= 3; ++k) {
                    const auto res = exact_turan(n, r, t, k);
                    ASSERT_TRUE(res.exact_max);
                    EXPECT_LE(BigInt(*res.exact_max), binomial(n, r));
                    EXPECT_LE(clique_bound(n, r, t, k).edge_count(), *res.exact_max);
                    EXPECT_LE(greedy_lower(n, r, t, k, 1).edge_count(), *res.exact_max);
                    if (r >= 2 * t + 1 && n >= small_kernel_b_size(t, k) + r - t - 1)
                        EXPECT_LE(small_kernel(n, r, t, k).edge_count(), *res.exact_max);
                }
            }
        }
    }
}

TEST(GreedyLower, FreeAndSeeded) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto h = greedy_lower(9, 3, 1, 3, seed);
        EXPECT_FALSE(find_sunflower(h, 1, 3));
        EXPECT_EQ(h, greedy_lower(9, 3, 1, 3, seed));
    }
    EXPECT_TRUE(greedy_lower(2, 3, 1, 2, 0).empty());
    // t + k(r-t) > n: no sunflower fits, so every candidate is kept.
    EXPECT_EQ(greedy_lower(5, 3, 1, 3, 0), complete_hypergraph(5, 3));
}

TEST(Envelope, Examples) {
    const auto a = bound_envelope(100, 3, 1, 5);
    EXPECT_EQ(a.regime, BoundRegime::small_kernel);
    EXPECT_TRUE(a.balanced);
    EXPECT_EQ(a.value, 2500);
    EXPECT_EQ(a.small_formula, a.large_formula);

    const auto b = bound_envelope(100, 3, 2, 5);
    EXPECT_EQ(b.regime, BoundRegime::large_kernel);
    EXPECT_EQ(b.value, 50000);
    EXPECT_FALSE(b.balanced);

    for (int t = 0; t <= 4; ++t) {
        const auto c = bound_envelope(17, 2 * t + 1, t, 3);
        EXPECT_EQ(c.small_formula, c.large_formula);
    }
    EXPECT_THROW(bound_envelope(10, 3, 3, 2), InvalidArgument);
}

TEST(Estimate, FallsBackAboveCeiling) {
    const auto res = estimate_turan(12, 3, 1, 2);
    EXPECT_EQ(res.status, TuranStatus::lower_bound_only);
    EXPECT_FALSE(res.exact_max);
    EXPECT_FALSE(find_sunflower(res.lower_witness, 1, 2));
    EXPECT_GE(res.lower_witness.edge_count(), small_kernel(12, 3, 1, 2).edge_count());
    EXPECT_EQ(estimate_turan(6, 2, 1, 2).status, TuranStatus::exact);
}
