#include "hyperthresh/absorbing.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "hyperthresh/error.hpp"
#include "hyperthresh/random.hpp"

namespace hyperthresh {

int absorber_r(int k) { return (k + 1) / 2; }
int absorber_r_prime(int k) { return k / 2; }

std::optional<AbsorptionCertificate> is_absorbing(const Hypergraph& h, VertexSet s, VertexSet q)
{
    if (!s.disjoint(q)) throw InvalidInput("absorber " + to_string(s) + " meets " + to_string(q));
    if (!(s | q).subset_of(h.vertices())) throw InvalidInput("absorption sets leave the vertex set");
    if (s.size() % h.k() != 0 || (s | q).size() % h.k() != 0)
        throw InvalidInput("|S| and |S ∪ Q| must be multiples of k");
    auto inner = search_perfect_matching(h, s);
    if (inner.status != SearchStatus::found) return std::nullopt;
    auto outer = search_perfect_matching(h, s | q);
    if (outer.status != SearchStatus::found) return std::nullopt;
    return AbsorptionCertificate{q, s, std::move(inner.matching), std::move(outer.matching)};
}

QSplit default_split(VertexSet q, int k)
{
    const auto idx = q.indices();
    const int rp = absorber_r_prime(k);
    QSplit split;
    for (int i = 0; i < static_cast<int>(idx.size()); ++i)
        (i < rp ? split.x : split.y) |= VertexSet::singleton(idx[static_cast<std::size_t>(i)]);
    return split;
}

std::vector<QSplit> all_splits(VertexSet q, int k)
{
    std::vector<QSplit> out;
    for_each_subset(q, absorber_r_prime(k), [&](VertexSet x) { out.push_back({x, q - x}); });
    return out;
}

namespace {

Matching make_matching(std::initializer_list<VertexSet> edges)
{
    Matching m{std::vector<VertexSet>(edges)};
    m.normalize();
    return m;
}

void check_query(const Hypergraph& h, VertexSet q, const AbsorberQuery& query)
{
    if (h.k() < 2) throw InvalidInput("structured absorbers need k >= 2");
    if (q.size() != h.k()) throw InvalidInput("absorbed set must have exactly k vertices, got " + to_string(q));
    if (!q.subset_of(h.vertices())) throw InvalidInput("absorbed set leaves the vertex set");
    if (query.split) {
        const auto& s = *query.split;
        if (s.q() != q || !s.x.disjoint(s.y) || s.x.size() != absorber_r_prime(h.k()) || s.y.size() != absorber_r(h.k()))
            throw InvalidInput("split does not divide Q into r' and r vertices");
    }
}

std::vector<QSplit> splits_for(VertexSet q, int k, const AbsorberQuery& query)
{
    if (query.union_all_splits) return all_splits(q, k);
    return {query.split.value_or(default_split(q, k))};
}

class NeighborhoodCache {
public:
    explicit NeighborhoodCache(const Hypergraph& h) : h_(h) {}

    const std::vector<VertexSet>& operator()(VertexSet s)
    {
        auto it = cache_.find(s.mask());
        if (it == cache_.end()) it = cache_.emplace(s.mask(), neighborhood(h_, s)).first;
        return it->second;
    }

private:
    const Hypergraph& h_;
    std::unordered_map<Mask, std::vector<VertexSet>> cache_;
};

template <typename Absorber>
class Collector {
public:
    explicit Collector(std::size_t budget) : budget_(budget) {}

    /// False once the budget is exhausted.
    bool add(const Absorber& a)
    {
        ++labeled_;
        if (found_.contains(a.set)) return true;
        if (budget_ != 0 && found_.size() >= budget_) {
            truncated_ = true;
            return false;
        }
        found_.emplace(a.set, a);
        return true;
    }

    AbsorberList<Absorber> finish() &&
    {
        AbsorberList<Absorber> out;
        for (auto& [set, a] : found_) out.absorbers.push_back(a);
        out.labeled_count = labeled_;
        out.truncated = truncated_;
        return out;
    }

private:
    std::size_t budget_;
    std::map<VertexSet, Absorber> found_;
    std::uint64_t labeled_ = 0;
    bool truncated_ = false;
};

} // namespace

Matching KAbsorber::matching_of_set() const { return make_matching({x_prime | y_prime}); }
Matching KAbsorber::matching_with_q() const { return make_matching({split.x | x_prime, split.y | y_prime}); }
Matching TwoKAbsorber::matching_of_set() const { return make_matching({x_prime | w_prime, y_prime | z_prime}); }
Matching TwoKAbsorber::matching_with_q() const
{
    return make_matching({split.x | x_prime, split.y | y_prime, w_prime | z_prime});
}

AbsorberList<KAbsorber> enumerate_absorbing_ksets(const Hypergraph& h, VertexSet q, const AbsorberQuery& query)
{
    check_query(h, q, query);
    const VertexSet avoid = q | query.forbidden;
    NeighborhoodCache nbr(h);
    Collector<KAbsorber> out(query.budget);
    for (const QSplit& split : splits_for(q, h.k(), query)) {
        for (VertexSet xp : nbr(split.x)) {
            if (!xp.disjoint(avoid)) continue;
            for (VertexSet yp : nbr(split.y)) {
                if (!yp.disjoint(avoid | xp) || !h.is_edge(xp | yp)) continue;
                if (!out.add(KAbsorber{xp | yp, split, xp, yp})) return std::move(out).finish();
            }
        }
    }
    return std::move(out).finish();
}

AbsorberList<TwoKAbsorber> enumerate_absorbing_2ksets(const Hypergraph& h, VertexSet q, const AbsorberQuery& query)
{
    check_query(h, q, query);
    const VertexSet avoid = q | query.forbidden;
    NeighborhoodCache nbr(h);
    Collector<TwoKAbsorber> out(query.budget);
    for (const QSplit& split : splits_for(q, h.k(), query)) {
        for (VertexSet xp : nbr(split.x)) {
            if (!xp.disjoint(avoid)) continue;
            for (VertexSet wp : nbr(xp)) {
                if (!wp.disjoint(avoid)) continue;
                const VertexSet used = avoid | xp | wp;
                for (VertexSet yp : nbr(split.y)) {
                    if (!yp.disjoint(used)) continue;
                    for (VertexSet zp : nbr(wp)) {
                        if (!zp.disjoint(used | yp) || !h.is_edge(yp | zp)) continue;
                        if (!out.add(TwoKAbsorber{xp | yp | wp | zp, split, xp, yp, wp, zp})) return std::move(out).finish();
                    }
                }
            }
        }
    }
    return std::move(out).finish();
}

AbsorbingMatching build_absorbing_matching(const Hypergraph& h, const AbsorbingMatchingOptions& options)
{
    if (!(options.xi > 0.0 && options.xi < 1.0)) throw InvalidInput("xi must lie in (0, 1)");
    const int n = h.n();
    const int k = h.k();
    AbsorbingMatching out;
    out.cap = static_cast<std::size_t>(std::floor(options.xi * n / k + 1e-9));
    const std::size_t max_attempts = options.max_attempts != 0 ? options.max_attempts : static_cast<std::size_t>(8 * n);
    if (k < 2) return out;

    Rng rng(options.seed);
    VertexSet covered;
    while (out.matching.size() < out.cap && out.attempts < max_attempts) {
        const VertexSet free = h.vertices() - covered;
        if (free.size() < k) break;
        ++out.attempts;
        const VertexSet q = rng.subset(free, k);
        AbsorberQuery query;
        query.forbidden = covered;
        query.budget = options.per_q_budget;
        const auto singles = enumerate_absorbing_ksets(h, q, query);
        const auto doubles = enumerate_absorbing_2ksets(h, q, query);
        out.availability.push_back({q, singles.absorbers.size(), doubles.absorbers.size(), singles.truncated || doubles.truncated});

        if (!singles.absorbers.empty()) {
            const auto& a = singles.absorbers.front();
            out.matching.edges.push_back(a.set);
            out.records.push_back({q, a.set, k, {a.set}});
            covered |= a.set;
        } else if (!doubles.absorbers.empty() && out.cap - out.matching.size() >= 2) {
            const auto& a = doubles.absorbers.front();
            const auto edges = a.matching_of_set().edges;
            out.matching.edges.insert(out.matching.edges.end(), edges.begin(), edges.end());
            out.records.push_back({q, a.set, 2 * k, edges});
            covered |= a.set;
        }
    }
    out.matching.normalize();
    return out;
}

std::string to_string(PipelineStatus s)
{
    switch (s) {
    case PipelineStatus::perfect: return "perfect";
    case PipelineStatus::perfect_fallback: return "perfect-fallback";
    case PipelineStatus::no_perfect: return "no-perfect-matching";
    case PipelineStatus::failed: return "failed";
    case PipelineStatus::aborted: return "aborted";
    }
    return "unknown";
}

namespace {

class Stopwatch {
public:
    double lap_ms()
    {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// The greedy phase draws from its own stream so phase 1 and phase 2 stay independent.
constexpr std::uint64_t kGreedyStream = 0x9e3779b97f4a7c15ULL;

} // namespace

PipelineReport pm_via_absorption(const Hypergraph& h, const PipelineParams& params)
{
    if (h.n() % h.k() != 0) throw InvalidInput("k does not divide n");
    PipelineReport report;
    report.params = params;
    report.n = h.n();
    report.k = h.k();
    SearchOptions search;
    search.node_budget = params.node_budget;
    Stopwatch clock;

    AbsorbingMatchingOptions abs_options;
    abs_options.xi = params.xi;
    abs_options.seed = params.seed;
    abs_options.max_attempts = params.max_attempts;
    const auto absorbing = build_absorbing_matching(h, abs_options);
    report.absorbing_size = absorbing.matching.size();
    report.absorbing_cap = absorbing.cap;
    report.absorbers = absorbing.records;
    const VertexSet reserved = absorbing.matching.covered();
    report.absorbing_ms = clock.lap_ms();

    const Matching greedy = max_matching_greedy(h, params.seed ^ kGreedyStream, h.vertices() - reserved);
    report.greedy_size = greedy.size();
    const VertexSet leftover = h.vertices() - reserved - greedy.covered();
    report.leftover = static_cast<std::size_t>(leftover.size());
    report.leftover_divisible = leftover.size() % h.k() == 0;
    report.chunks = report.leftover / static_cast<std::size_t>(h.k());
    report.greedy_ms = clock.lap_ms();

    bool done = false;
    if (leftover.empty()) {
        report.matching.edges = greedy.edges;
        report.matching.edges.insert(report.matching.edges.end(), absorbing.matching.edges.begin(), absorbing.matching.edges.end());
        done = true;
    } else if (report.leftover_divisible) {
        const auto res = search_perfect_matching(h, reserved | leftover, search);
        report.search_nodes += res.nodes;
        if (res.status == SearchStatus::found) {
            report.matching.edges = greedy.edges;
            report.matching.edges.insert(report.matching.edges.end(), res.matching.edges.begin(), res.matching.edges.end());
            done = true;
        } else if (res.status == SearchStatus::aborted) {
            report.truncated = true;
        }
    }
    report.absorbed = done;
    report.absorption_ms = clock.lap_ms();

    if (done) {
        report.status = PipelineStatus::perfect;
    } else if (params.fallback) {
        report.fallback_used = true;
        auto res = search_perfect_matching(h, h.vertices(), search);
        report.search_nodes += res.nodes;
        switch (res.status) {
        case SearchStatus::found:
            report.status = PipelineStatus::perfect_fallback;
            report.matching = std::move(res.matching);
            break;
        case SearchStatus::absent: report.status = PipelineStatus::no_perfect; break;
        case SearchStatus::aborted:
            report.status = PipelineStatus::aborted;
            report.truncated = true;
            break;
        }
        report.fallback_ms = clock.lap_ms();
    } else {
        report.status = report.truncated ? PipelineStatus::aborted : PipelineStatus::failed;
    }
    report.matching.normalize();
    if ((report.status == PipelineStatus::perfect || report.status == PipelineStatus::perfect_fallback) &&
        !verify_matching(h, report.matching, true))
        throw std::logic_error("pipeline assembled an invalid perfect matching");
    return report;
}

} // namespace hyperthresh
