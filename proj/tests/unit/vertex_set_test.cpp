#include "hyperthresh/vertex_set.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"

namespace hyperthresh {
namespace {

TEST(VertexSet, IndicesRoundTrip)
{
    const VertexSet s = VertexSet::from_indices({1, 4, 63});
    EXPECT_EQ(s.size(), 3);
    EXPECT_EQ(s.indices(), (std::vector<int>{1, 4, 63}));
    EXPECT_EQ(s.front(), 1);
    EXPECT_EQ(to_string(s), "{1,4,63}");
    EXPECT_EQ(to_string(VertexSet{}), "{}");
}

TEST(VertexSet, RejectsUnsortedOrOutOfRange)
{
    EXPECT_THROW(VertexSet::from_indices({2, 1}), InvalidInput);
    EXPECT_THROW(VertexSet::from_indices({3, 3}), InvalidInput);
    EXPECT_THROW(VertexSet::from_indices({64}), InvalidInput);
    EXPECT_THROW(VertexSet::from_indices({-1}), InvalidInput);
}

TEST(VertexSet, OrderingIsLexicographicOnIndexLists)
{
    const auto a = VertexSet::from_indices({0, 5});
    const auto b = VertexSet::from_indices({1, 2});
    const auto c = VertexSet::from_indices({0, 5, 6});
    EXPECT_LT(a, b); // numerically a > b, lexicographically a < b
    EXPECT_LT(a, c); // a proper prefix comes first
    EXPECT_LT(VertexSet{}, a);
}

TEST(VertexSet, OrderingAgreesWithVectorComparison)
{
    std::vector<VertexSet> all;
    for (Mask m = 0; m < 256; ++m) all.push_back(VertexSet::from_mask(m));
    for (VertexSet x : all)
        for (VertexSet y : all) EXPECT_EQ(x < y, x.indices() < y.indices());
}

TEST(VertexSet, SetAlgebra)
{
    const auto a = VertexSet::from_indices({0, 1, 2});
    const auto b = VertexSet::from_indices({2, 3});
    EXPECT_EQ(a | b, VertexSet::prefix(4));
    EXPECT_EQ(a & b, VertexSet::singleton(2));
    EXPECT_EQ(a - b, VertexSet::from_indices({0, 1}));
    EXPECT_FALSE(a.disjoint(b));
    EXPECT_TRUE((a - b).subset_of(a));
    EXPECT_EQ(b.rank_of(3), 1);
    EXPECT_EQ(VertexSet::prefix(64).size(), 64);
}

TEST(ForEachSubset, CountsAndOrder)
{
    for (int m = 0; m <= 9; ++m)
        for (int s = 0; s <= m + 1; ++s) {
            const auto list = subsets(VertexSet::prefix(m), s);
            EXPECT_EQ(list.size(), binom(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(s)));
            EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
            EXPECT_EQ(std::adjacent_find(list.begin(), list.end()), list.end());
            for (VertexSet x : list) EXPECT_EQ(x.size(), s);
        }
}

TEST(ForEachSubset, RespectsSparseUniverse)
{
    const auto u = VertexSet::from_indices({2, 7, 40});
    const auto list = subsets(u, 2);
    ASSERT_EQ(list.size(), 3U);
    EXPECT_EQ(list[0], VertexSet::from_indices({2, 7}));
    EXPECT_EQ(list[2], VertexSet::from_indices({7, 40}));
    EXPECT_TRUE(subsets(u, -1).empty());
}

} // namespace
} // namespace hyperthresh
