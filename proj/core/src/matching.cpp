#include "hyperthresh/matching.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "hyperthresh/error.hpp"
#include "hyperthresh/random.hpp"

namespace hyperthresh {

VertexSet Matching::covered() const
{
    VertexSet c;
    for (VertexSet e : edges) c |= e;
    return c;
}

void Matching::normalize() { std::sort(edges.begin(), edges.end()); }

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::aborted: return "aborted";
    }
    return "unknown";
}

std::string to_string(MatchingDefect d)
{
    switch (d) {
    case MatchingDefect::none: return "none";
    case MatchingDefect::wrong_size: return "wrong-size";
    case MatchingDefect::non_edge: return "non-edge";
    case MatchingDefect::overlap: return "overlap";
    case MatchingDefect::not_perfect: return "not-perfect";
    }
    return "unknown";
}

namespace {

class ExactCover {
public:
    ExactCover(const Hypergraph& h, VertexSet within, const SearchOptions& options)
        : target_(within.mask()), options_(options), incident_(static_cast<std::size_t>(h.n()))
    {
        for (VertexSet e : h.edges()) {
            if (!e.subset_of(within)) continue;
            const auto id = static_cast<std::uint32_t>(edges_.size());
            edges_.push_back(e.mask());
            for (int v : e.indices()) incident_[static_cast<std::size_t>(v)].push_back(id);
        }
    }

    SearchResult run()
    {
        SearchResult result{SearchStatus::absent, {}, 0};
        const bool ok = solve(0);
        result.nodes = nodes_;
        if (ok) {
            result.status = SearchStatus::found;
            for (Mask e : chosen_) result.matching.edges.push_back(VertexSet::from_mask(e));
            result.matching.normalize();
        } else if (aborted_) {
            result.status = SearchStatus::aborted;
        }
        return result;
    }

private:
    bool solve(Mask covered)
    {
        ++nodes_;
        if (options_.node_budget != 0 && nodes_ > options_.node_budget) {
            aborted_ = true;
            return false;
        }
        const Mask uncovered = target_ & ~covered;
        if (uncovered == 0) return true;
        if (options_.transposition_cache && dead_.contains(covered)) return false;

        int branch = -1;
        std::size_t branch_count = std::numeric_limits<std::size_t>::max();
        for (Mask m = uncovered; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            std::size_t live = 0;
            for (std::uint32_t id : incident_[static_cast<std::size_t>(v)]) {
                if ((edges_[id] & covered) == 0 && ++live >= branch_count) break;
            }
            if (live == 0) {
                remember_dead(covered);
                return false;
            }
            if (live < branch_count) {
                branch_count = live;
                branch = v;
            }
        }

        for (std::uint32_t id : incident_[static_cast<std::size_t>(branch)]) {
            const Mask e = edges_[id];
            if ((e & covered) != 0) continue;
            chosen_.push_back(e);
            if (solve(covered | e)) return true;
            chosen_.pop_back();
            if (aborted_) return false;
        }
        remember_dead(covered);
        return false;
    }

    void remember_dead(Mask covered)
    {
        if (options_.transposition_cache) dead_.insert(covered);
    }

    Mask target_;
    SearchOptions options_;
    std::vector<Mask> edges_;
    std::vector<std::vector<std::uint32_t>> incident_;
    std::vector<Mask> chosen_;
    std::unordered_set<Mask> dead_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

SearchResult search_perfect_matching(const Hypergraph& h, VertexSet within, const SearchOptions& options)
{
    if (!within.subset_of(h.vertices())) throw InvalidInput("search set leaves the vertex set");
    if (within.size() % h.k() != 0)
        throw InvalidInput("k = " + std::to_string(h.k()) + " does not divide the " + std::to_string(within.size()) +
                           " vertices to cover");
    return ExactCover(h, within, options).run();
}

std::optional<Matching> find_perfect_matching(const Hypergraph& h)
{
    auto result = search_perfect_matching(h, h.vertices());
    if (result.status == SearchStatus::found) return std::move(result.matching);
    return std::nullopt;
}

Matching max_matching_greedy(const Hypergraph& h, std::uint64_t seed) { return max_matching_greedy(h, seed, h.vertices()); }

Matching max_matching_greedy(const Hypergraph& h, std::uint64_t seed, VertexSet within)
{
    Rng rng(seed);
    std::vector<VertexSet> live;
    for (VertexSet e : h.edges())
        if (e.subset_of(within)) live.push_back(e);
    Matching m;
    while (!live.empty()) {
        const VertexSet pick = live[rng.below(live.size())];
        m.edges.push_back(pick);
        std::erase_if(live, [&](VertexSet e) { return !e.disjoint(pick); });
    }
    m.normalize();
    return m;
}

MatchingCheck verify_matching(const Hypergraph& h, const Matching& m, bool require_perfect)
{
    VertexSet seen;
    for (VertexSet e : m.edges) {
        if (e.size() != h.k()) return {false, MatchingDefect::wrong_size, e};
        if (!h.is_edge(e)) return {false, MatchingDefect::non_edge, e};
        if (!e.disjoint(seen)) return {false, MatchingDefect::overlap, e};
        seen |= e;
    }
    if (require_perfect && seen != h.vertices()) return {false, MatchingDefect::not_perfect, std::nullopt};
    return {true, MatchingDefect::none, std::nullopt};
}

} // namespace hyperthresh
