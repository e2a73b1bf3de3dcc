#include "hyperthresh/lemmas.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"
#include "hyperthresh/verify/oracle.hpp"

namespace hyperthresh {
namespace {

std::uint64_t ub(int x) { return static_cast<std::uint64_t>(x); }

TEST(DF, UniformityOne)
{
    for (int size = 0; size <= 7; ++size) {
        std::vector<VertexSet> edges;
        for (int v = 0; v < size; ++v) edges.push_back(VertexSet::singleton(v));
        const Hypergraph f(7, 1, edges);
        EXPECT_EQ(df_pair_sum(f), ub(size * (7 - size)));
    }
}

TEST(DF, CompleteIsZero)
{
    const auto f = Hypergraph::complete(7, 3);
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) EXPECT_EQ(df_count(f, u, v), 0U);
}

TEST(DF, SingleEdge)
{
    const Hypergraph f(4, 2, {VertexSet::prefix(2)});
    // Of the two 3-sets through 0 and 2 only {0,1,2} separates them.
    EXPECT_EQ(df_count(f, 0, 2), 1U);
    EXPECT_EQ(df_count(f, 2, 0), 1U);
    EXPECT_EQ(df_count(f, 0, 1), 0U);
    EXPECT_EQ(df_pair_sum(f), 4U);
    EXPECT_THROW(df_count(f, 1, 1), InvalidInput);
}

TEST(DF, SymmetryComplementAndOracle)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int r = 1 + static_cast<int>(seed % 3);
        const auto f = random_hypergraph(9, r, 0.4, seed);
        const auto fc = complement(f);
        for (int u = 0; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v) {
                EXPECT_EQ(df_count(f, u, v), df_count(f, v, u));
                EXPECT_EQ(df_count(f, u, v), df_count(fc, u, v));
            }
        EXPECT_EQ(df_pair_sum(f), oracle::df_pair_sum(f));
        EXPECT_EQ(df_pair_sum(f), df_pair_sum(fc));
    }
}

TEST(Profile, CompleteAndIdentities)
{
    const auto p = t_profile(Hypergraph::complete(8, 3));
    ASSERT_EQ(p.t.size(), 5U);
    EXPECT_EQ(p.t[4], binom(8, 4));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(p.t[i], 0U);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int r = 1 + static_cast<int>(seed % 3);
        const int n = r + 2 + static_cast<int>(seed % 9);
        const auto f = random_hypergraph(n, r, 0.1 + 0.004 * static_cast<double>(seed), seed);
        const auto prof = t_profile(f);
        EXPECT_EQ(prof.t, oracle::t_profile(f));
        std::uint64_t total = 0;
        for (auto x : prof.t) total += x;
        EXPECT_EQ(total, binom(ub(n), ub(r + 1)));
        for (const auto& rep : verify_profile_identities(f)) EXPECT_EQ(rep.verdict, Verdict::pass) << rep.check;
    }
}

TEST(KruskalKatona, CliqueIsTight)
{
    for (int r = 1; r <= 3; ++r)
        for (int w = r + 1; w <= 9; ++w) {
            std::vector<VertexSet> edges = subsets(VertexSet::prefix(w), r);
            const Hypergraph f(10, r, edges);
            EXPECT_DOUBLE_EQ(kk_solve(f.edge_count(), r), w);
            const auto rep = kk_clique_bound_check(f);
            EXPECT_EQ(rep.verdict, Verdict::pass);
            EXPECT_EQ(std::get<std::int64_t>(rep.lhs), static_cast<std::int64_t>(binom(ub(w), ub(r + 1))));
            EXPECT_NEAR(to_double(rep.margin), 0.0, 1e-6);
        }
}

TEST(KruskalKatona, EmptyAndRandom)
{
    EXPECT_EQ(kk_clique_bound_check(Hypergraph::empty(8, 2)).verdict, Verdict::pass);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto f = random_hypergraph(6 + static_cast<int>(seed % 7), 2, 0.5, seed);
        const auto rep = kk_clique_bound_check(f);
        EXPECT_NE(rep.verdict, Verdict::fail) << "seed " << seed;
        EXPECT_EQ(static_cast<std::uint64_t>(std::get<std::int64_t>(rep.lhs)), oracle::t_profile(f).back());
    }
    const double x = kk_solve(10, 2);
    EXPECT_NEAR(real_binom(x, 2), 10.0, 1e-6);
    EXPECT_DOUBLE_EQ(real_binom(5.0, 2), 10.0);
    EXPECT_THROW(kk_solve(0, 2), InvalidInput);
}

TEST(ParitySplit, Anchors)
{
    const auto s = parity_split_sums(4, 2, 3);
    EXPECT_EQ(s.even_sum, 8U);
    EXPECT_EQ(s.odd_sum, 12U);
    EXPECT_EQ(signed_coefficient(4, 2, 3), -4);
    for (int a = 0; a <= 10; ++a)
        for (int r = 0; r <= 10; ++r) {
            EXPECT_EQ(parity_split_sums(a, 0, r).even_sum, binom(ub(a), ub(r)));
            EXPECT_EQ(parity_split_sums(a, 0, r).odd_sum, 0U);
            if (r % 2 == 1) EXPECT_EQ(signed_coefficient(a, a, r), 0);
        }
}

TEST(ParitySplit, IdentitiesAgainstConvolution)
{
    for (int a = 0; a <= 30; a += 3)
        for (int b = 0; b <= 30; b += 4)
            for (int r = 0; r <= 12; ++r) {
                EXPECT_EQ(static_cast<Int128>(signed_coefficient(a, b, r)), oracle::signed_coefficient(a, b, r));
                for (const auto& rep : parity_split_check(a, b, r)) EXPECT_EQ(rep.verdict, Verdict::pass) << rep.check;
            }
}

TEST(EvenSum, Envelope)
{
    for (int n = 8; n <= 64; n += 2)
        for (int r = 1; r <= 4; ++r)
            for (const auto& rep : evensum_asymptotic_check(0.5, r, n)) EXPECT_EQ(rep.verdict, Verdict::pass);
    for (int r = 1; r <= 4; ++r)
        for (const auto& rep : evensum_asymptotic_check(1.0, r, 20)) EXPECT_EQ(rep.verdict, Verdict::pass);
    for (const auto& rep : evensum_asymptotic_check(0.25, 1, 12)) EXPECT_NEAR(to_double(rep.lhs), 0.0, 1e-9);
    EXPECT_THROW(evensum_asymptotic_check(0.3, 2, 7), InvalidInput);
}

TEST(RootInequality, Grid)
{
    for (int r = 1; r <= 8; ++r)
        for (int i = 0; i <= 100; ++i) {
            const auto rep = root_inequality_check(i / 100.0, r);
            EXPECT_EQ(rep.verdict, Verdict::pass) << "r " << r << " alpha " << i / 100.0;
        }
    EXPECT_NEAR(to_double(root_inequality_check(0.3, 1).margin), 0.0, 1e-12);
    EXPECT_THROW(root_inequality_check(1.5, 2), InvalidInput);
}

TEST(Monotonicity, RandomHypergraphs)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto h = random_hypergraph(8, 4, 0.6, seed);
        for (int lp = 0; lp < 4; ++lp)
            for (int l = 0; l <= lp; ++l) EXPECT_EQ(degree_monotonicity_check(h, l, lp).verdict, Verdict::pass);
    }
    EXPECT_THROW(degree_monotonicity_check(Hypergraph::complete(6, 3), 2, 1), InvalidQuery);
}

TEST(LowerBound, ReportedNotAsserted)
{
    const auto rep = df_sum_lower_bound_report(random_hypergraph(10, 2, 0.5, 1));
    EXPECT_EQ(rep.check, "df-sum-lower-bound");
    EXPECT_DOUBLE_EQ(to_double(rep.margin), to_double(rep.lhs) - to_double(rep.rhs));
}

TEST(Verdicts, Text)
{
    EXPECT_EQ(to_string(Verdict::inconclusive), "inconclusive");
    const auto rep = identity_report("x", 3, 5);
    EXPECT_EQ(rep.verdict, Verdict::fail);
    EXPECT_EQ(std::get<std::int64_t>(rep.margin), 2);
}

} // namespace
} // namespace hyperthresh
