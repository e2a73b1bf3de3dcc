#include "hyperthresh/lemmas.hpp"

#include <cmath>

#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"

namespace hyperthresh {

namespace {

constexpr double kKkTolerance = 1e-9;
constexpr double kInconclusiveShare = 1e-6;

std::uint64_t ub(int x) { return static_cast<std::uint64_t>(x); }

std::int64_t as_signed(std::uint64_t x)
{
    if (x > static_cast<std::uint64_t>(INT64_MAX)) throw ArithmeticOverflow("count exceeds the signed 64-bit range");
    return static_cast<std::int64_t>(x);
}

CheckReport lower_bound_report(std::string check, double lhs, double rhs)
{
    const double margin = lhs - rhs;
    return {std::move(check), lhs, rhs, margin, margin >= 0 ? Verdict::pass : Verdict::fail};
}

CheckReport upper_bound_report(std::string check, double lhs, double rhs)
{
    const double margin = rhs - lhs;
    return {std::move(check), lhs, rhs, margin, margin >= 0 ? Verdict::pass : Verdict::fail};
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

double to_double(const Number& x)
{
    return std::visit([](auto v) { return static_cast<double>(v); }, x);
}

CheckReport identity_report(std::string check, std::int64_t lhs, std::int64_t rhs)
{
    return {std::move(check), lhs, rhs, rhs - lhs, lhs == rhs ? Verdict::pass : Verdict::fail};
}

std::uint64_t df_count(const Hypergraph& f, int u, int v)
{
    if (u == v) throw InvalidInput("D_F needs distinct vertices");
    if (u < 0 || v < 0 || u >= f.n() || v >= f.n()) throw InvalidInput("D_F vertex outside the vertex set");
    const VertexSet su = VertexSet::singleton(u);
    const VertexSet sv = VertexSet::singleton(v);
    std::uint64_t count = 0;
    for_each_subset(f.vertices() - su - sv, f.k() - 1, [&](VertexSet t) {
        if (f.is_edge(t | sv) != f.is_edge(t | su)) ++count;
    });
    return count;
}

std::uint64_t df_pair_sum(const Hypergraph& f)
{
    std::uint64_t total = 0;
    for (int u = 0; u < f.n(); ++u)
        for (int v = u + 1; v < f.n(); ++v) total += df_count(f, u, v);
    return total;
}

TProfile t_profile(const Hypergraph& f)
{
    const int r = f.k();
    TProfile p{r, std::vector<std::uint64_t>(static_cast<std::size_t>(r + 2), 0)};
    for_each_subset(f.vertices(), r + 1, [&](VertexSet s) {
        std::size_t spanned = 0;
        for (int v : s.indices())
            if (f.is_edge(s - VertexSet::singleton(v))) ++spanned;
        ++p.t[spanned];
    });
    return p;
}

std::vector<CheckReport> verify_profile_identities(const Hypergraph& f)
{
    const TProfile p = t_profile(f);
    const std::int64_t r = f.k();
    std::int64_t weighted = 0;
    std::int64_t pair_weighted = 0;
    for (std::int64_t i = 1; i <= r + 1; ++i) {
        const auto ti = as_signed(p.t[static_cast<std::size_t>(i)]);
        weighted += i * ti;
        if (i <= r) pair_weighted += i * (r + 1 - i) * ti;
    }
    const std::int64_t edge_side = as_signed(f.edge_count()) * (f.n() - r);
    return {identity_report("profile-edge-identity", edge_side, weighted),
            identity_report("profile-pair-identity", as_signed(df_pair_sum(f)), pair_weighted)};
}

double real_binom(double x, int j)
{
    double value = 1.0;
    for (int i = 0; i < j; ++i) value *= (x - i) / static_cast<double>(i + 1);
    return value;
}

double kk_solve(std::uint64_t m, int r)
{
    if (r < 1 || m == 0) throw InvalidInput("kk_solve needs r >= 1 and m >= 1");
    const double target = static_cast<double>(m);
    double lo = r;
    double hi = r;
    while (real_binom(hi, r) < target) hi *= 2;
    while (hi - lo > kKkTolerance) {
        const double mid = 0.5 * (lo + hi);
        (real_binom(mid, r) < target ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    const double w = std::round(x);
    if (w >= r && w < 64 && binom(static_cast<std::uint64_t>(w), ub(r)) == m) x = w;
    return x;
}

CheckReport kk_clique_bound_check(const Hypergraph& f)
{
    const int r = f.k();
    const TProfile p = t_profile(f);
    const auto cliques = as_signed(p.t.back());
    if (f.edge_count() == 0) return {"kk-clique-bound", cliques, std::int64_t{0}, std::int64_t{0}, Verdict::pass};
    const double x = kk_solve(f.edge_count(), r);
    const double bound = real_binom(x, r + 1);
    const double margin = bound - static_cast<double>(cliques);
    Verdict verdict = Verdict::pass;
    if (margin < 0) verdict = margin >= -kInconclusiveShare * std::max(bound, 1.0) ? Verdict::inconclusive : Verdict::fail;
    return {"kk-clique-bound", cliques, bound, margin, verdict};
}

ParitySplit parity_split_sums(int a, int b, int r)
{
    if (a < 0 || b < 0 || r < 0) throw InvalidInput("parity split sums need a, b, r >= 0");
    ParitySplit out{0, 0};
    for (int i = 0; i <= r; ++i) {
        const auto term = checked_mul(binom(ub(a), ub(r - i)), binom(ub(b), ub(i)));
        auto& slot = i % 2 == 0 ? out.even_sum : out.odd_sum;
        slot = checked_add(slot, term);
    }
    return out;
}

std::int64_t signed_coefficient(int a, int b, int r)
{
    if (a < 0 || b < 0 || r < 0) throw InvalidInput("signed coefficient needs a, b, r >= 0");
    std::vector<Int128> poly(static_cast<std::size_t>(r + 1), 0);
    poly[0] = 1;
    auto multiply = [&](int sign) {
        for (int d = r; d >= 1; --d) poly[static_cast<std::size_t>(d)] += sign * poly[static_cast<std::size_t>(d - 1)];
    };
    for (int i = 0; i < a; ++i) multiply(1);
    for (int i = 0; i < b; ++i) multiply(-1);
    const Int128 c = poly[static_cast<std::size_t>(r)];
    if (c > INT64_MAX || c < INT64_MIN) throw ArithmeticOverflow("signed coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(c);
}

std::vector<CheckReport> parity_split_check(int a, int b, int r)
{
    const ParitySplit s = parity_split_sums(a, b, r);
    const auto even = as_signed(s.even_sum);
    const auto odd = as_signed(s.odd_sum);
    return {identity_report("parity-split-vandermonde", even + odd, as_signed(binom(ub(a + b), ub(r)))),
            identity_report("parity-split-signed-coefficient", even - odd, signed_coefficient(a, b, r))};
}

std::vector<CheckReport> evensum_asymptotic_check(double c, int r, int n)
{
    if (!(c >= 0.0 && c <= 1.0)) throw InvalidInput("c must lie in [0, 1]");
    if (r < 1 || n < 0) throw InvalidInput("evensum check needs r >= 1 and n >= 0");
    const double cn = c * n;
    const double a = std::round(cn);
    if (std::abs(cn - a) > 1e-9) throw InvalidInput("c n must be an integer");
    const ParitySplit s = parity_split_sums(static_cast<int>(a), n - static_cast<int>(a), r);
    const double lead = std::pow(static_cast<double>(n), r) / (2.0 * std::tgamma(r + 1.0));
    const double skew = std::pow(2.0 * c - 1.0, r);
    const double envelope = std::pow(2.0, r) * r * std::pow(static_cast<double>(n), r - 1);
    return {upper_bound_report("evensum-envelope-even", std::abs(static_cast<double>(s.even_sum) - lead * (1.0 + skew)), envelope),
            upper_bound_report("evensum-envelope-odd", std::abs(static_cast<double>(s.odd_sum) - lead * (1.0 - skew)), envelope)};
}

CheckReport root_inequality_check(double alpha, int r)
{
    if (!(alpha >= 0.0 && alpha <= 1.0) || r < 1) throw InvalidInput("root inequality needs alpha in [0, 1] and r >= 1");
    return lower_bound_report("root-inequality", 1.0 - std::pow(alpha, 1.0 / r), (1.0 - alpha) / r);
}

CheckReport df_sum_lower_bound_report(const Hypergraph& f)
{
    const int r = f.k();
    const double rho = static_cast<double>(f.edge_count()) / static_cast<double>(binom(ub(f.n()), ub(r)));
    const double alpha = std::min(rho, 1.0 - rho);
    const double bound = alpha * (1.0 - alpha) * static_cast<double>(binom(ub(f.n()), ub(r + 1)));
    return lower_bound_report("df-sum-lower-bound", static_cast<double>(df_pair_sum(f)), bound);
}

CheckReport degree_monotonicity_check(const Hypergraph& h, int l, int l_prime)
{
    const int n = h.n();
    const int k = h.k();
    if (l < 0 || l > l_prime || l_prime >= k) throw InvalidQuery("monotonicity needs 0 <= l <= l' <= k-1");
    const auto lhs = checked_mul(min_l_degree(h, l), binom(ub(n - l_prime), ub(k - l_prime)));
    const auto rhs = checked_mul(min_l_degree(h, l_prime), binom(ub(n - l), ub(k - l)));
    const auto sl = as_signed(lhs);
    const auto sr = as_signed(rhs);
    return {"degree-monotonicity", sl, sr, sl - sr, sl >= sr ? Verdict::pass : Verdict::fail};
}

} // namespace hyperthresh
