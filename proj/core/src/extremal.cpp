#include "hyperthresh/extremal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"
#include "hyperthresh/parallel.hpp"

namespace hyperthresh {

namespace {

int parity_bit(Kind kind) { return kind == Kind::odd ? 1 : 0; }

void check_spec(const ExtremalSpec& spec)
{
    if (spec.k < 1 || spec.k > spec.n())
        throw InvalidInput("construction needs 1 <= k <= n, got k = " + std::to_string(spec.k));
}

void check_divisible(int n, int k)
{
    if (k < 1 || n < 1 || n % k != 0)
        throw InvalidInput("k = " + std::to_string(k) + " does not divide n = " + std::to_string(n));
}

bool matches_kind(VertexSet e, VertexSet a, Kind kind) { return ((e & a).size() & 1) == parity_bit(kind); }

std::uint64_t edits_against(const Hypergraph& h, VertexSet a, Kind kind, std::uint64_t spec_edges)
{
    std::uint64_t agree = 0;
    for (VertexSet e : h.edges())
        if (matches_kind(e, a, kind)) ++agree;
    return h.edge_count() + spec_edges - 2 * agree;
}

} // namespace

std::string to_string(Kind kind) { return kind == Kind::odd ? "odd" : "even"; }

Kind kind_from_string(const std::string& s)
{
    if (s == "odd") return Kind::odd;
    if (s == "even") return Kind::even;
    throw InvalidInput("kind must be 'odd' or 'even', got '" + s + "'");
}

Bipartition::Bipartition(int n, VertexSet a) : n_(n), a_(a)
{
    if (n < 2 || n > kMaxVertices) throw InvalidInput("bipartition needs 2 <= n <= 64");
    if (!a.subset_of(VertexSet::prefix(n))) throw InvalidInput("class A leaves the vertex set");
    if (a.empty() || a.size() == n) throw InvalidInput("both bipartition classes must be non-empty");
}

Bipartition Bipartition::canonical(int n, int size_a)
{
    if (size_a < 1 || size_a >= n) throw InvalidInput("|A| must lie in [1, n-1], got " + std::to_string(size_a));
    return Bipartition(n, VertexSet::prefix(size_a));
}

bool in_extremal_family(const ExtremalSpec& spec)
{
    if (spec.k < 1 || spec.n() % spec.k != 0) return false;
    const bool a_odd = spec.part.size_a() % 2 == 1;
    if (spec.kind == Kind::even) return a_odd;
    const bool quotient_odd = (spec.n() / spec.k) % 2 == 1;
    return quotient_odd ? !a_odd : a_odd;
}

Hypergraph build(const ExtremalSpec& spec)
{
    check_spec(spec);
    std::vector<VertexSet> edges;
    const VertexSet a = spec.part.a();
    for_each_subset(VertexSet::prefix(spec.n()), spec.k, [&](VertexSet e) {
        if (matches_kind(e, a, spec.kind)) edges.push_back(e);
    });
    return Hypergraph(spec.n(), spec.k, std::move(edges));
}

std::uint64_t extremal_edge_count(const ExtremalSpec& spec)
{
    check_spec(spec);
    return profile_degree(spec, 0, 0);
}

std::vector<ExtremalSpec> hext_family(int n, int k)
{
    if (k < 2) throw InvalidInput("extremal family needs k >= 2");
    check_divisible(n, k);
    std::vector<ExtremalSpec> out;
    for (int size_a = 1; size_a < n; ++size_a) {
        for (Kind kind : {Kind::odd, Kind::even}) {
            ExtremalSpec spec{kind, Bipartition::canonical(n, size_a), k};
            if (in_extremal_family(spec)) out.push_back(spec);
        }
    }
    return out;
}

std::uint64_t profile_degree(const ExtremalSpec& spec, int l, int profile)
{
    const int a = spec.part.size_a();
    const int b = spec.part.size_b();
    const int i = profile;
    if (i < std::max(0, l - b) || i > std::min(l, a)) throw InvalidQuery("intersection profile out of range");
    std::uint64_t total = 0;
    for (int j = 0; j <= spec.k - l; ++j) {
        if (((i + j) & 1) != parity_bit(spec.kind)) continue;
        const auto term = checked_mul(binom(static_cast<std::uint64_t>(a - i), static_cast<std::uint64_t>(j)),
                                      binom(static_cast<std::uint64_t>(b - l + i), static_cast<std::uint64_t>(spec.k - l - j)));
        total = checked_add(total, term);
    }
    return total;
}

std::uint64_t min_l_degree_closed(const ExtremalSpec& spec, int l)
{
    check_spec(spec);
    if (l < 0 || l >= spec.k) throw InvalidQuery("minimum l-degree needs 0 <= l <= k-1, got l = " + std::to_string(l));
    const int lo = std::max(0, l - spec.part.size_b());
    const int hi = std::min(l, spec.part.size_a());
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (int i = lo; i <= hi; ++i) best = std::min(best, profile_degree(spec, l, i));
    return best;
}

ThresholdReport threshold(int n, int k, int l)
{
    if (l < 1 || l > k - 1) throw InvalidInput("threshold needs 1 <= l <= k-1, got l = " + std::to_string(l));
    ThresholdReport report{n, k, l, 0, {}, {}};
    for (const auto& spec : hext_family(n, k)) report.table.push_back({spec, min_l_degree_closed(spec, l)});
    for (const auto& row : report.table) report.value = std::max(report.value, row.min_degree);
    for (const auto& row : report.table)
        if (row.min_degree == report.value) report.witnesses.push_back(row.spec);
    return report;
}

std::string to_string(HalfInteger h)
{
    if (h.is_integer()) return std::to_string(h.twice() / 2);
    const std::int64_t whole = h.floor();
    return std::to_string(whole) + ".5";
}

HalfInteger threshold_codegree_formula(int n, int k)
{
    if (k < 3) throw InvalidInput("codegree formula needs k >= 3");
    check_divisible(n, k);
    // Twice the value: n - 2k + 2C.
    const std::int64_t base = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(k);
    if (k % 4 == 0 && (n / k) % 2 == 1) return HalfInteger::from_twice(base + 4);
    if (k % 2 == 1 && n % 2 == 1) {
        // (n-1)/2 is an integer only for odd n.
        if (((n - 1) / 2) % 2 == 1) return HalfInteger::from_twice(base + 3);
        return HalfInteger::from_twice(base + 1);
    }
    return HalfInteger::from_twice(base + 2);
}

ParityCertificate no_pm_certificate(const ExtremalSpec& spec, int n_over_k)
{
    check_spec(spec);
    if (spec.n() % spec.k != 0 || n_over_k != spec.n() / spec.k)
        throw InvalidInput("n/k = " + std::to_string(n_over_k) + " does not match the spec");
    if (!in_extremal_family(spec))
        throw NotApplicable("spec (|A| = " + std::to_string(spec.part.size_a()) + ", kind " + to_string(spec.kind) +
                            ") is outside the extremal family; no parity certificate");
    ParityCertificate cert;
    cert.edges_in_matching = n_over_k;
    cert.forced_sum_parity = spec.kind == Kind::odd ? (n_over_k & 1) : 0;
    cert.size_a_parity = spec.part.size_a() & 1;
    cert.no_perfect_matching = cert.forced_sum_parity != cert.size_a_parity;
    if (spec.kind == Kind::odd)
        cert.reason = "every edge meets A oddly, so " + std::to_string(n_over_k) + " disjoint edges meet A in a sum of parity " +
                      std::to_string(cert.forced_sum_parity) + ", but |A| = " + std::to_string(spec.part.size_a());
    else
        cert.reason = "every edge meets A evenly, so any matching covers an even part of A, but |A| = " +
                      std::to_string(spec.part.size_a());
    return cert;
}

std::uint64_t closeness(const Hypergraph& h, const ExtremalSpec& spec)
{
    check_spec(spec);
    if (h.n() != spec.n() || h.k() != spec.k) throw InvalidInput("closeness: hypergraph and spec disagree on n or k");
    return edits_against(h, spec.part.a(), spec.kind, extremal_edge_count(spec));
}

ClosenessResult closeness_min(const Hypergraph& h, Kind kind, ClosenessMode mode, int jobs)
{
    const int n = h.n();
    const int k = h.k();
    if (n < 2) throw InvalidInput("closeness_min needs n >= 2");
    const int lo = n / 2;
    const int hi = (n + 1) / 2;
    std::vector<int> sizes{lo};
    if (hi != lo) sizes.push_back(hi);

    auto spec_edges = [&](int size_a) {
        return extremal_edge_count(ExtremalSpec{kind, Bipartition::canonical(n, size_a), k});
    };

    if (mode == ClosenessMode::exact) {
        if (n > 16) throw InvalidInput("exact closeness_min supports n <= 16");
        std::vector<VertexSet> candidates;
        std::vector<std::uint64_t> counts;
        for (int s : sizes) {
            const auto c = spec_edges(s);
            for_each_subset(h.vertices(), s, [&](VertexSet a) {
                candidates.push_back(a);
                counts.push_back(c);
            });
        }
        std::vector<std::uint64_t> edits(candidates.size());
        parallel_for(candidates.size(), jobs, [&](std::size_t i) { edits[i] = edits_against(h, candidates[i], kind, counts[i]); });
        const auto best = static_cast<std::size_t>(std::min_element(edits.begin(), edits.end()) - edits.begin());
        return {Bipartition(n, candidates[best]), edits[best], true};
    }

    // Seed: the floor(n/2) vertices of highest degree, ties by index.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(n), 0);
    for (VertexSet e : h.edges())
        for (int v : e.indices()) ++deg[static_cast<std::size_t>(v)];
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg[static_cast<std::size_t>(x)] > deg[static_cast<std::size_t>(y)]; });
    VertexSet a;
    for (int i = 0; i < lo; ++i) a |= VertexSet::singleton(order[static_cast<std::size_t>(i)]);

    auto score = [&](VertexSet cand) { return edits_against(h, cand, kind, spec_edges(cand.size())); };
    std::uint64_t current = score(a);
    bool improved = true;
    while (improved) {
        improved = false;
        const VertexSet b = h.vertices() - a;
        std::vector<VertexSet> moves;
        for (int x : a.indices())
            for (int y : b.indices()) moves.push_back((a - VertexSet::singleton(x)) | VertexSet::singleton(y));
        if (hi != lo) {
            if (a.size() == lo)
                for (int y : b.indices()) moves.push_back(a | VertexSet::singleton(y));
            else
                for (int x : a.indices()) moves.push_back(a - VertexSet::singleton(x));
        }
        for (VertexSet cand : moves) {
            const auto s = score(cand);
            if (s < current) {
                current = s;
                a = cand;
                improved = true;
                break;
            }
        }
    }
    return {Bipartition(n, a), current, false};
}

} // namespace hyperthresh
