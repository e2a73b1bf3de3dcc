#include "hyperthresh/matching.hpp"

#include <gtest/gtest.h>

#include "hyperthresh/error.hpp"
#include "hyperthresh/extremal.hpp"
#include "hyperthresh/verify/oracle.hpp"

namespace hyperthresh {
namespace {

Matching of(std::initializer_list<VertexSet> edges) { return Matching{edges}; }

TEST(FindPerfectMatching, Examples)
{
    const auto k6 = Hypergraph::complete(6, 3);
    const auto m = find_perfect_matching(k6);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(*m, of({VertexSet::prefix(3), VertexSet::from_indices({3, 4, 5})}));

    EXPECT_FALSE(find_perfect_matching(build({Kind::odd, Bipartition::canonical(6, 3), 3})).has_value());

    const Hypergraph two(6, 3, {VertexSet::from_indices({0, 2, 4}), VertexSet::from_indices({1, 3, 5})});
    EXPECT_EQ(find_perfect_matching(two), of({VertexSet::from_indices({0, 2, 4}), VertexSet::from_indices({1, 3, 5})}));

    EXPECT_THROW(find_perfect_matching(Hypergraph::complete(7, 3)), InvalidInput);
}

TEST(FindPerfectMatching, AgreesWithOracle)
{
    for (double p : {0.05, 0.1, 0.2, 0.35}) {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const int n = seed % 2 == 0 ? 9 : 6;
            const auto h = random_hypergraph(n, 3, p, seed * 31 + 7);
            const auto m = find_perfect_matching(h);
            EXPECT_EQ(m.has_value(), oracle::has_perfect_matching(h, h.vertices())) << "p " << p << " seed " << seed;
            if (m) EXPECT_TRUE(verify_matching(h, *m, true).ok);
        }
    }
}

TEST(FindPerfectMatching, CacheDoesNotChangeAnswer)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto h = random_hypergraph(12, 3, 0.04, seed);
        const auto plain = search_perfect_matching(h, h.vertices());
        const auto cached = search_perfect_matching(h, h.vertices(), {0, true});
        EXPECT_EQ(plain.status, cached.status);
        EXPECT_LE(cached.nodes, plain.nodes);
        if (plain.status == SearchStatus::found) EXPECT_EQ(plain.matching, cached.matching);
    }
}

TEST(SearchPerfectMatching, WithinSubsetAndBudget)
{
    const auto h = Hypergraph::complete(9, 3);
    const auto within = VertexSet::from_indices({1, 2, 4, 6, 7, 8});
    const auto r = search_perfect_matching(h, within);
    ASSERT_EQ(r.status, SearchStatus::found);
    EXPECT_EQ(r.matching.covered(), within);

    const auto hard = build({Kind::odd, Bipartition::canonical(12, 5), 3});
    const auto capped = search_perfect_matching(hard, hard.vertices(), {3, false});
    EXPECT_EQ(capped.status, SearchStatus::aborted);
    EXPECT_EQ(search_perfect_matching(hard, hard.vertices()).status, SearchStatus::absent);
    EXPECT_EQ(search_perfect_matching(h, VertexSet{}).status, SearchStatus::found);
}

TEST(Greedy, Examples)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_EQ(max_matching_greedy(Hypergraph::complete(6, 3), seed).size(), 2U);
        EXPECT_TRUE(max_matching_greedy(Hypergraph::empty(6, 3), seed).edges.empty());
        const Hypergraph h(4, 3, {VertexSet::prefix(3), VertexSet::from_indices({1, 2, 3})});
        EXPECT_EQ(max_matching_greedy(h, seed).size(), 1U);
    }
}

TEST(Greedy, MaximalAndDeterministic)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto h = random_hypergraph(12, 3, 0.08, seed);
        const auto m = max_matching_greedy(h, seed);
        EXPECT_EQ(m, max_matching_greedy(h, seed));
        EXPECT_TRUE(verify_matching(h, m, false).ok);
        const VertexSet cover = m.covered();
        for (VertexSet e : h.edges()) EXPECT_FALSE(e.disjoint(cover)) << "seed " << seed;
    }
}

TEST(Verify, Defects)
{
    const auto h = Hypergraph(6, 3, {VertexSet::prefix(3), VertexSet::from_indices({2, 3, 4}), VertexSet::from_indices({3, 4, 5})});
    EXPECT_TRUE(verify_matching(h, of({VertexSet::prefix(3), VertexSet::from_indices({3, 4, 5})}), true).ok);

    const auto overlap = verify_matching(h, of({VertexSet::prefix(3), VertexSet::from_indices({2, 3, 4})}), false);
    EXPECT_FALSE(overlap.ok);
    EXPECT_EQ(overlap.defect, MatchingDefect::overlap);
    EXPECT_EQ(overlap.offending, VertexSet::from_indices({2, 3, 4}));

    const auto non_edge = verify_matching(h, of({VertexSet::from_indices({0, 1, 5})}), false);
    EXPECT_EQ(non_edge.defect, MatchingDefect::non_edge);

    const auto partial = verify_matching(h, of({VertexSet::prefix(3)}), true);
    EXPECT_EQ(partial.defect, MatchingDefect::not_perfect);
    EXPECT_TRUE(verify_matching(h, of({VertexSet::prefix(3)}), false).ok);

    EXPECT_EQ(verify_matching(h, of({VertexSet::prefix(2)}), false).defect, MatchingDefect::wrong_size);
    EXPECT_EQ(to_string(MatchingDefect::overlap), "overlap");
}

} // namespace
} // namespace hyperthresh
