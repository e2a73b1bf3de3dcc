#include "hyperthresh/auxgraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"
#include "hyperthresh/parallel.hpp"
#include "hyperthresh/random.hpp"

namespace hyperthresh {

namespace {

constexpr double kSlack = 1e-9;
constexpr std::uint64_t kMaxBitsetWords = std::uint64_t{1} << 24;
constexpr std::uint64_t kMaxColoringEntries = std::uint64_t{1} << 26;

bool at_least(std::uint64_t count, double bound) { return static_cast<double>(count) + kSlack >= bound; }
bool at_most(std::uint64_t count, double bound) { return static_cast<double>(count) <= bound + kSlack; }

void check_gamma(double gamma)
{
    if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidInput("gamma must lie in (0, 1)");
}

std::vector<VertexSet> subsets_by_rank(int n, int size)
{
    std::vector<VertexSet> out(binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(size)));
    for_each_subset(VertexSet::prefix(n), size, [&](VertexSet s) { out[colex_rank(s)] = s; });
    return out;
}

/// Rows of N_G(P) over r'-set ranks (or the transpose), as packed bits.
class BitMatrix {
public:
    BitMatrix(std::uint64_t rows, std::uint64_t cols) : cols_(cols), words_((cols + 63) / 64)
    {
        if (rows * words_ > kMaxBitsetWords) throw InvalidInput("auxiliary graph too large for bitset rows");
        bits_.assign(rows * words_, 0);
    }

    void set(std::uint64_t row, std::uint64_t col) { bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64); }
    bool test(std::uint64_t row, std::uint64_t col) const { return (bits_[row * words_ + col / 64] >> (col % 64)) & 1U; }

    std::uint64_t row_count(std::uint64_t row) const
    {
        std::uint64_t c = 0;
        for (std::uint64_t w = 0; w < words_; ++w) c += static_cast<std::uint64_t>(std::popcount(bits_[row * words_ + w]));
        return c;
    }

    std::uint64_t common(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t c = 0;
        for (std::uint64_t w = 0; w < words_; ++w)
            c += static_cast<std::uint64_t>(std::popcount(bits_[a * words_ + w] & bits_[b * words_ + w]));
        return c;
    }

    /// |row ∩ mask| for a packed column mask of the same width.
    std::uint64_t common_with(std::uint64_t row, const std::vector<std::uint64_t>& mask) const
    {
        std::uint64_t c = 0;
        for (std::uint64_t w = 0; w < words_; ++w) c += static_cast<std::uint64_t>(std::popcount(bits_[row * words_ + w] & mask[w]));
        return c;
    }

    std::vector<std::uint64_t> row(std::uint64_t r) const
    {
        return {bits_.begin() + static_cast<std::ptrdiff_t>(r * words_), bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * words_)};
    }

    std::uint64_t words() const { return words_; }

private:
    std::uint64_t cols_;
    std::uint64_t words_;
    std::vector<std::uint64_t> bits_;
};

struct AuxBits {
    AuxShape shape;
    BitMatrix forward;  // r-set rank -> r'-set ranks
    BitMatrix backward; // r'-set rank -> r-set ranks
};

AuxBits aux_bits(const Hypergraph& h)
{
    const AuxShape s = aux_shape(h.n(), h.k());
    AuxBits out{s, BitMatrix(s.big_n, s.big_n_prime), BitMatrix(s.big_n_prime, s.big_n)};
    for (VertexSet e : h.edges()) {
        for_each_subset(e, s.r, [&](VertexSet p) {
            const auto i = colex_rank(p);
            const auto j = colex_rank(e - p);
            out.forward.set(i, j);
            out.backward.set(j, i);
        });
    }
    return out;
}

std::vector<std::uint64_t> good_counts(const AuxBits& g, double gamma)
{
    const double bound = gamma * static_cast<double>(g.shape.big_n_prime);
    const std::uint64_t big_n = g.shape.big_n;
    std::vector<std::uint64_t> good(big_n, 0);
    for (std::uint64_t a = 0; a < big_n; ++a)
        for (std::uint64_t b = a; b < big_n; ++b) {
            if (!at_least(g.forward.common(a, b), bound)) continue;
            ++good[b];
            if (a != b) ++good[a];
        }
    return good;
}

bool case_a_from(const AuxBits& g, const std::vector<std::uint64_t>& good, double gamma)
{
    const double need = (0.5 + gamma) * static_cast<double>(g.shape.big_n);
    return std::all_of(good.begin(), good.end(), [&](std::uint64_t c) { return at_least(c, need); });
}

std::vector<VertexSet> lambda_from(const AuxBits& g, double gamma)
{
    const double need = (0.5 + gamma) * static_cast<double>(g.shape.big_n);
    std::vector<VertexSet> out;
    for (std::uint64_t j = 0; j < g.shape.big_n_prime; ++j)
        if (at_least(g.backward.row_count(j), need)) out.push_back(colex_unrank(j, g.shape.r_prime));
    return out;
}

bool case_b_from(const AuxBits& g, double gamma)
{
    return at_least(lambda_from(g, gamma).size(), 2.0 * gamma * static_cast<double>(g.shape.big_n_prime));
}

void check_coloring(const PartitionColoring& c)
{
    if (c.phi.size() != c.shape.big_n || c.psi.size() != c.shape.big_n_prime)
        throw InvalidInput("colouring does not cover every subset");
}

PartitionColoring blank_coloring(int n, int k)
{
    const AuxShape s = aux_shape(n, k);
    if (s.big_n > kMaxColoringEntries || s.big_n_prime > kMaxColoringEntries) throw InvalidInput("colouring too large");
    return {s, std::vector<std::uint8_t>(s.big_n, 0), std::vector<std::uint8_t>(s.big_n_prime, 0)};
}

std::uint64_t edge_count_between(const BitMatrix& forward, const std::vector<std::uint8_t>& rows_in, const std::vector<std::uint64_t>& cols)
{
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < rows_in.size(); ++i)
        if (rows_in[i]) total += forward.common_with(i, cols);
    return total;
}

std::vector<std::uint64_t> pack(const std::vector<std::uint8_t>& flags, std::uint64_t words)
{
    std::vector<std::uint64_t> out(words, 0);
    for (std::uint64_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out[i / 64] |= std::uint64_t{1} << (i % 64);
    return out;
}

std::vector<std::uint8_t> negate(const std::vector<std::uint8_t>& flags)
{
    std::vector<std::uint8_t> out(flags.size());
    std::transform(flags.begin(), flags.end(), out.begin(), [](std::uint8_t f) { return static_cast<std::uint8_t>(!f); });
    return out;
}

std::vector<VertexSet> members_of(const std::vector<std::uint8_t>& flags, int size, bool value)
{
    std::vector<VertexSet> out;
    for (std::uint64_t i = 0; i < flags.size(); ++i)
        if (static_cast<bool>(flags[i]) == value) out.push_back(colex_unrank(i, size));
    std::sort(out.begin(), out.end());
    return out;
}

/// The first `take` indices under: preferred first, then by descending score, then by index.
std::vector<std::uint8_t> balanced_completion(const std::vector<std::uint8_t>& preferred, const std::vector<std::uint64_t>& score,
                                              std::uint64_t take)
{
    std::vector<std::uint64_t> order(preferred.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        if (preferred[a] != preferred[b]) return preferred[a] > preferred[b];
        return score[a] > score[b];
    });
    std::vector<std::uint8_t> chosen(preferred.size(), 0);
    for (std::uint64_t i = 0; i < take; ++i) chosen[order[i]] = 1;
    return chosen;
}

} // namespace

AuxShape aux_shape(int n, int k)
{
    if (k < 2 || k > n || n > kMaxVertices) throw InvalidInput("auxiliary graph needs 2 <= k <= n <= 64");
    const int r = (k + 1) / 2;
    const int rp = k - r;
    return {n, k, r, rp, binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)),
            binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rp))};
}

bool aux_adjacent(const Hypergraph& h, VertexSet p, VertexSet p_prime)
{
    const AuxShape s = aux_shape(h.n(), h.k());
    if (p.size() != s.r || p_prime.size() != s.r_prime)
        throw InvalidInput("auxiliary vertices need sizes r = " + std::to_string(s.r) + " and r' = " + std::to_string(s.r_prime));
    if (!(p | p_prime).subset_of(h.vertices())) throw InvalidInput("auxiliary vertex leaves the vertex set");
    return p.disjoint(p_prime) && h.is_edge(p | p_prime);
}

std::uint64_t aux_edge_count(const Hypergraph& h)
{
    const AuxShape s = aux_shape(h.n(), h.k());
    const auto table = l_degree_table(h, s.r);
    return std::accumulate(table.begin(), table.end(), std::uint64_t{0});
}

std::vector<std::pair<VertexSet, VertexSet>> aux_edges(const Hypergraph& h)
{
    const AuxShape s = aux_shape(h.n(), h.k());
    if (h.n() > 12) throw InvalidInput("explicit auxiliary edge lists are limited to n <= 12");
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (VertexSet p : subsets_by_rank(h.n(), s.r))
        for (VertexSet q : subsets_by_rank(h.n(), s.r_prime))
            if (p.disjoint(q) && h.is_edge(p | q)) out.emplace_back(p, q);
    return out;
}

bool PartitionColoring::in_x1(VertexSet p) const { return phi.at(colex_rank(p)) != 0; }
bool PartitionColoring::in_y1(VertexSet p_prime) const { return psi.at(colex_rank(p_prime)) != 0; }
std::uint64_t PartitionColoring::x1_size() const { return static_cast<std::uint64_t>(std::count(phi.begin(), phi.end(), 1)); }
std::uint64_t PartitionColoring::y1_size() const { return static_cast<std::uint64_t>(std::count(psi.begin(), psi.end(), 1)); }

bool model_adjacent(const PartitionColoring& c, VertexSet p, VertexSet p_prime)
{
    return p.disjoint(p_prime) && c.in_x1(p) == c.in_y1(p_prime);
}

PartitionColoring parity_coloring(int n, int k, VertexSet a, Kind kind)
{
    if (!a.subset_of(VertexSet::prefix(n))) throw InvalidInput("colouring set leaves the vertex set");
    PartitionColoring c = blank_coloring(n, k);
    const int y1_parity = kind == Kind::odd ? 0 : 1;
    for (std::uint64_t i = 0; i < c.shape.big_n; ++i) c.phi[i] = (colex_unrank(i, c.shape.r) & a).size() % 2 == 1;
    for (std::uint64_t j = 0; j < c.shape.big_n_prime; ++j)
        c.psi[j] = (colex_unrank(j, c.shape.r_prime) & a).size() % 2 == y1_parity;
    return c;
}

PartitionColoring constant_coloring(int n, int k, bool x1, bool y1)
{
    PartitionColoring c = blank_coloring(n, k);
    std::fill(c.phi.begin(), c.phi.end(), static_cast<std::uint8_t>(x1));
    std::fill(c.psi.begin(), c.psi.end(), static_cast<std::uint8_t>(y1));
    return c;
}

PartitionColoring random_coloring(int n, int k, std::uint64_t seed)
{
    PartitionColoring c = blank_coloring(n, k);
    Rng rng(seed);
    for (auto& f : c.phi) f = static_cast<std::uint8_t>(rng.next() & 1U);
    for (auto& f : c.psi) f = static_cast<std::uint8_t>(rng.next() & 1U);
    return c;
}

std::uint64_t edit_distance_model(const Hypergraph& h, const PartitionColoring& c)
{
    check_coloring(c);
    if (c.shape.n != h.n() || c.shape.k != h.k()) throw InvalidInput("colouring and hypergraph disagree on n or k");
    std::uint64_t distance = 0;
    for_each_subset(h.vertices(), h.k(), [&](VertexSet s) {
        const bool edge = h.is_edge(s);
        for_each_subset(s, c.shape.r, [&](VertexSet p) {
            if (edge != (c.in_x1(p) == c.in_y1(s - p))) ++distance;
        });
    });
    return distance;
}

std::uint64_t bad_kset_count(const PartitionColoring& c)
{
    check_coloring(c);
    std::uint64_t bad = 0;
    for_each_subset(VertexSet::prefix(c.shape.n), c.shape.k, [&](VertexSet s) {
        bool adjacent = false;
        bool apart = false;
        for_each_subset(s, c.shape.r, [&](VertexSet p) { (c.in_x1(p) == c.in_y1(s - p) ? adjacent : apart) = true; });
        if (adjacent && apart) ++bad;
    });
    return bad;
}

std::uint64_t good_rtuple_count(const Hypergraph& h, VertexSet b, double gamma)
{
    check_gamma(gamma);
    const AuxBits g = aux_bits(h);
    if (b.size() != g.shape.r || !b.subset_of(h.vertices())) throw InvalidInput("b must be an r-subset of the vertex set");
    const double bound = gamma * static_cast<double>(g.shape.big_n_prime);
    const auto rb = colex_rank(b);
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < g.shape.big_n; ++a)
        if (at_least(g.forward.common(a, rb), bound)) ++count;
    return count;
}

bool case_a(const Hypergraph& h, double gamma)
{
    check_gamma(gamma);
    const AuxBits g = aux_bits(h);
    return case_a_from(g, good_counts(g, gamma), gamma);
}

std::vector<VertexSet> lambda_sets(const Hypergraph& h, double gamma)
{
    check_gamma(gamma);
    return lambda_from(aux_bits(h), gamma);
}

bool case_b(const Hypergraph& h, double gamma)
{
    check_gamma(gamma);
    return case_b_from(aux_bits(h), gamma);
}

DerivedPartition derive_partition(const Hypergraph& h, double gamma)
{
    check_gamma(gamma);
    const AuxBits g = aux_bits(h);
    const AuxShape& s = g.shape;
    const auto good = good_counts(g, gamma);
    if (case_a_from(g, good, gamma)) throw NotApplicable("case (a) holds: every r-set has enough good partners");
    if (case_b_from(g, gamma)) throw NotApplicable("case (b) holds: too many r'-sets have high degree");

    // Lexicographically first violator of case (a).
    const double need = (0.5 + gamma) * static_cast<double>(s.big_n);
    std::optional<VertexSet> witness;
    for_each_subset(h.vertices(), s.r, [&](VertexSet b) {
        if (!witness && !at_least(good[colex_rank(b)], need)) witness = b;
    });
    const auto w = colex_rank(*witness);

    std::vector<std::uint8_t> in_b_prime(s.big_n_prime, 0);
    for (std::uint64_t j = 0; j < s.big_n_prime; ++j) in_b_prime[j] = g.forward.test(w, j);
    const auto b_prime_bits = pack(in_b_prime, g.forward.words());

    const double small = gamma * static_cast<double>(s.big_n_prime);
    std::vector<std::uint8_t> in_a_prime(s.big_n, 0);
    std::vector<std::uint64_t> into_b_prime(s.big_n, 0);
    for (std::uint64_t i = 0; i < s.big_n; ++i) {
        into_b_prime[i] = g.forward.common_with(i, b_prime_bits);
        in_a_prime[i] = at_least(into_b_prime[i], small);
    }
    const auto a_prime_bits = pack(in_a_prime, g.backward.words());
    std::vector<std::uint64_t> into_a_prime(s.big_n_prime, 0);
    for (std::uint64_t j = 0; j < s.big_n_prime; ++j) into_a_prime[j] = g.backward.common_with(j, a_prime_bits);

    const auto x_prime = balanced_completion(in_a_prime, into_b_prime, (s.big_n + 1) / 2);
    const auto y_prime = balanced_completion(in_b_prime, into_a_prime, (s.big_n_prime + 1) / 2);

    DerivedPartition out{
        *witness,
        good[w],
        members_of(in_a_prime, s.r, true),
        members_of(in_a_prime, s.r, false),
        members_of(in_b_prime, s.r_prime, true),
        members_of(in_b_prime, s.r_prime, false),
        members_of(x_prime, s.r, true),
        members_of(y_prime, s.r_prime, true),
        PartitionColoring{s, x_prime, y_prime},
        0, 0, 0, 0, 0};
    const auto yp = pack(y_prime, g.forward.words());
    const auto yd = pack(negate(y_prime), g.forward.words());
    const auto xd = negate(x_prime);
    out.e_xp_yp = edge_count_between(g.forward, x_prime, yp);
    out.e_xd_yd = edge_count_between(g.forward, xd, yd);
    out.e_xp_yd = edge_count_between(g.forward, x_prime, yd);
    out.e_xd_yp = edge_count_between(g.forward, xd, yp);
    out.edit_distance = edit_distance_model(h, out.coloring);
    return out;
}

CdCounts cd_counts(const PartitionColoring& c, int u, int v)
{
    check_coloring(c);
    const int n = c.shape.n;
    if (u == v) throw InvalidInput("C/D counts need distinct vertices");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("C/D vertex outside the vertex set");
    const VertexSet su = VertexSet::singleton(u);
    const VertexSet sv = VertexSet::singleton(v);
    const VertexSet rest = VertexSet::prefix(n) - su - sv;
    CdCounts out{0, 0, 0, 0};
    for_each_subset(rest, c.shape.r - 1, [&](VertexSet t) { ++(c.in_x1(t | sv) == c.in_x1(t | su) ? out.c : out.d); });
    for_each_subset(rest, c.shape.r_prime - 1, [&](VertexSet t) {
        ++(c.in_y1(t | sv) == c.in_y1(t | su) ? out.c_prime : out.d_prime);
    });
    return out;
}

StructureReport classify_pairs(const PartitionColoring& c, double beta1, int jobs)
{
    check_coloring(c);
    if (!(beta1 > 0.0 && beta1 < 1.0)) throw InvalidInput("beta1 must lie in (0, 1)");
    const int n = c.shape.n;
    StructureReport rep;
    rep.n = n;
    rep.k = c.shape.k;
    rep.beta1 = beta1;
    rep.small_r = beta1 * std::pow(static_cast<double>(n), c.shape.r - 1);
    rep.small_r_prime = beta1 * std::pow(static_cast<double>(n), c.shape.r_prime - 1);
    const auto full = binom(static_cast<std::uint64_t>(n - 2), static_cast<std::uint64_t>(c.shape.r - 1));
    rep.degenerate = static_cast<double>(full) <= 2.0 * rep.small_r;
    if (rep.degenerate) rep.flags.emplace_back("degenerate-threshold");

    const auto un = static_cast<std::size_t>(n);
    std::vector<CdCounts> cd(un * un, CdCounts{0, 0, 0, 0});
    parallel_for(un, jobs, [&](std::size_t u) {
        for (std::size_t v = u + 1; v < un; ++v) cd[u * un + v] = cd[v * un + u] = cd_counts(c, static_cast<int>(u), static_cast<int>(v));
    });
    auto c_small = [&](const CdCounts& x) { return at_most(x.c, rep.small_r); };
    auto d_small = [&](const CdCounts& x) { return at_most(x.d, rep.small_r); };
    auto consistent = [&](const CdCounts& x) {
        return c_small(x) == at_most(x.c_prime, rep.small_r_prime) && d_small(x) == at_most(x.d_prime, rep.small_r_prime);
    };
    auto similar = [&](const CdCounts& x) { return c_small(x) || d_small(x); };

    std::vector<std::uint64_t> partners(un, 0);
    for (std::size_t u = 0; u < un; ++u)
        for (std::size_t v = u + 1; v < un; ++v) {
            const auto& x = cd[u * un + v];
            ++rep.pairs;
            const bool cons = consistent(x);
            const bool sim = similar(x);
            rep.consistent_pairs += cons;
            rep.similar_pairs += sim;
            if (cons && sim) {
                ++rep.consistent_similar_pairs;
                ++partners[u];
                ++partners[v];
            }
        }
    rep.v0 = static_cast<int>(std::max_element(partners.begin(), partners.end()) - partners.begin());
    const auto v0 = static_cast<std::size_t>(rep.v0);

    rep.c_to_v0.assign(un, 0);
    rep.d_to_v0.assign(un, 0);
    rep.v1_class = VertexSet::singleton(rep.v0);
    bool ambiguous = false;
    for (std::size_t v = 0; v < un; ++v) {
        if (v == v0) continue;
        const auto& x = cd[v * un + v0];
        rep.c_to_v0[v] = x.c;
        rep.d_to_v0[v] = x.d;
        const auto vs = VertexSet::singleton(static_cast<int>(v));
        if (!consistent(x) || !similar(x)) {
            rep.v0_class |= vs;
        } else if (d_small(x) && c_small(x)) {
            rep.v0_class |= vs;
            ambiguous = true;
        } else {
            (d_small(x) ? rep.v1_class : rep.v2_class) |= vs;
        }
    }
    if (ambiguous) rep.flags.emplace_back("ambiguous-similarity");

    std::uint64_t agree = 0;
    for (std::uint64_t i = 0; i < c.shape.big_n; ++i)
        if (static_cast<bool>(c.phi[i]) == ((colex_unrank(i, c.shape.r) & rep.v1_class).size() % 2 == 1)) ++agree;
    const double frac = static_cast<double>(agree) / static_cast<double>(c.shape.big_n);
    rep.x1_agreement = std::max(frac, 1.0 - frac);
    return rep;
}

StructureReport analyze_structure(const Hypergraph& h, double gamma, double beta1, int jobs)
{
    check_gamma(gamma);
    const AuxBits g = aux_bits(h);
    const bool a_holds = case_a_from(g, good_counts(g, gamma), gamma);
    const bool b_holds = case_b_from(g, gamma);
    if (a_holds || b_holds) {
        StructureReport rep;
        rep.n = h.n();
        rep.k = h.k();
        rep.beta1 = beta1;
        rep.case_a = a_holds;
        rep.case_b = b_holds;
        rep.v0_class = h.vertices();
        if (a_holds) rep.flags.emplace_back("case-a-holds");
        if (b_holds) rep.flags.emplace_back("case-b-holds");
        return rep;
    }
    const DerivedPartition dp = derive_partition(h, gamma);
    StructureReport rep = classify_pairs(dp.coloring, beta1, jobs);
    rep.bad_ksets = bad_kset_count(dp.coloring);
    rep.edit_distance = dp.edit_distance;
    return rep;
}

} // namespace hyperthresh
