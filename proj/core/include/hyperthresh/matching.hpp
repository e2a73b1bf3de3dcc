#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperthresh/hypergraph.hpp"

namespace hyperthresh {

/// A set of pairwise disjoint edges, kept in lexicographic order.
struct Matching {
    std::vector<VertexSet> edges;

    VertexSet covered() const;
    std::size_t size() const { return edges.size(); }
    bool is_perfect_for(int n) const { return covered() == VertexSet::prefix(n); }
    void normalize();

    friend bool operator==(const Matching&, const Matching&) = default;
};

struct SearchOptions {
    std::uint64_t node_budget = 0;     // 0: unlimited
    bool transposition_cache = false; // remember covered-vertex states proven dead
};

enum class SearchStatus { found, absent, aborted };

std::string to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status;
    Matching matching; // perfect matching when status == found
    std::uint64_t nodes = 0;
};

/// Exact backtracking search for a perfect matching of H[within].
///
/// Branches on the uncovered vertex with fewest live incident edges (lowest
/// index on ties), tries its edges in lexicographic order, and cuts a branch as
/// soon as an uncovered vertex has no live edge. An empty `within` yields the
/// empty matching. Throws InvalidInput unless k divides |within|.
SearchResult search_perfect_matching(const Hypergraph& h, VertexSet within, const SearchOptions& options = {});

/// Perfect matching of the whole hypergraph, or nullopt when none exists.
/// Throws InvalidInput unless k | n.
std::optional<Matching> find_perfect_matching(const Hypergraph& h);

/// Randomized greedy maximal matching inside `within`: repeatedly adds a
/// uniformly random edge among those avoiding every covered vertex.
Matching max_matching_greedy(const Hypergraph& h, std::uint64_t seed);
Matching max_matching_greedy(const Hypergraph& h, std::uint64_t seed, VertexSet within);

enum class MatchingDefect { none, wrong_size, non_edge, overlap, not_perfect };

std::string to_string(MatchingDefect d);

struct MatchingCheck {
    bool ok;
    MatchingDefect defect;
    std::optional<VertexSet> offending; // edge that triggered the defect, if any

    explicit operator bool() const { return ok; }
};

MatchingCheck verify_matching(const Hypergraph& h, const Matching& m, bool require_perfect);

} // namespace hyperthresh
