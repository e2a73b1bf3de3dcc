#include "hyperthresh/combinatorics.hpp"

#include <gtest/gtest.h>

#include "hyperthresh/error.hpp"
#include "hyperthresh/random.hpp"

namespace hyperthresh {
namespace {

TEST(Binom, Anchors)
{
    EXPECT_EQ(binom(6, 3), 20U);
    EXPECT_EQ(binom(4, 7), 0U);
    EXPECT_EQ(binom(0, 0), 1U);
    EXPECT_EQ(binom(64, 32), 1832624140942590534ULL);
    EXPECT_THROW(binom(70, 35), ArithmeticOverflow);
}

TEST(Binom, PascalRule)
{
    // Independent route: additive recurrence against the multiplicative formula.
    std::vector<std::vector<std::uint64_t>> pascal(61, std::vector<std::uint64_t>(61, 0));
    for (std::size_t a = 0; a <= 60; ++a) {
        pascal[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
    }
    for (std::uint64_t a = 0; a <= 60; ++a)
        for (std::uint64_t b = 0; b <= 60; ++b) EXPECT_EQ(binom(a, b), pascal[a][b]) << a << " " << b;
}

TEST(Binom, SignedVariant)
{
    EXPECT_EQ(binom_signed(5, 2), 10);
    EXPECT_EQ(binom_signed(-1, 2), 0);
    EXPECT_EQ(binom_signed(5, -1), 0);
    EXPECT_EQ(binom_signed(3, 5), 0);
}

TEST(CheckedArithmetic, DetectsOverflow)
{
    EXPECT_EQ(checked_add(1, 2), 3U);
    EXPECT_THROW(checked_add(UINT64_MAX, 1), ArithmeticOverflow);
    EXPECT_EQ(checked_mul(1ULL << 31, 1ULL << 32), 1ULL << 63);
    EXPECT_THROW(checked_mul(1ULL << 32, 1ULL << 32), ArithmeticOverflow);
}

TEST(Colex, BijectionOnPrefix)
{
    for (int n = 1; n <= 10; ++n)
        for (int s = 0; s <= n; ++s) {
            std::vector<bool> seen(binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)), false);
            for_each_subset(VertexSet::prefix(n), s, [&](VertexSet x) {
                const auto r = colex_rank(x);
                ASSERT_LT(r, seen.size());
                EXPECT_FALSE(seen[r]);
                seen[r] = true;
                EXPECT_EQ(colex_unrank(r, s), x);
            });
        }
}

TEST(Colex, RankIsIndependentOfUniverse)
{
    // Colex rank of a subset of [0, n) does not depend on n.
    EXPECT_EQ(colex_rank(VertexSet::from_indices({0, 1, 2})), 0U);
    EXPECT_EQ(colex_rank(VertexSet::from_indices({0, 1, 3})), 1U);
    EXPECT_EQ(colex_rank(VertexSet::from_indices({2, 3, 4})), 9U);
}

TEST(Rng, Deterministic)
{
    Rng a(7);
    Rng b(7);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, BelowAndSubset)
{
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(7), 7U);
    const auto u = VertexSet::from_indices({1, 3, 5, 7, 9});
    for (int i = 0; i < 100; ++i) {
        const auto s = rng.subset(u, 3);
        EXPECT_EQ(s.size(), 3);
        EXPECT_TRUE(s.subset_of(u));
    }
}

} // namespace
} // namespace hyperthresh
