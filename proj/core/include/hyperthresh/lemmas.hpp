#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hyperthresh/hypergraph.hpp"

namespace hyperthresh {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

using Number = std::variant<std::int64_t, double>;

double to_double(const Number& x);

/// One checked inequality or identity: lhs against rhs, margin = rhs - lhs for
/// upper bounds and lhs - rhs for lower bounds (0 for identities that hold).
struct CheckReport {
    std::string check;
    Number lhs;
    Number rhs;
    Number margin;
    Verdict verdict;
};

/// Exact identity report: pass iff lhs == rhs, margin = rhs - lhs.
CheckReport identity_report(std::string check, std::int64_t lhs, std::int64_t rhs);

// The r-uniform families F below are Hypergraph objects with k = r.

/// (r+1)-sets S ∋ u, v with exactly one of S - u, S - v in F. Throws InvalidInput when u = v.
std::uint64_t df_count(const Hypergraph& f, int u, int v);

/// Sum of df_count over unordered pairs.
std::uint64_t df_pair_sum(const Hypergraph& f);

/// t[i] = number of (r+1)-subsets spanning exactly i edges of F, i = 0..r+1.
struct TProfile {
    int r = 0;
    std::vector<std::uint64_t> t;
};

TProfile t_profile(const Hypergraph& f);

/// |E|(n - r) = Σ i t_i and df_pair_sum = Σ i (r+1-i) t_i.
std::vector<CheckReport> verify_profile_identities(const Hypergraph& f);

/// binom(x, j) = x (x-1) ... (x-j+1) / j! for real x.
double real_binom(double x, int j);

/// Real x >= r with binom(x, r) = m, by bisection to 1e-9; exact integer when one fits.
double kk_solve(std::uint64_t m, int r);

/// t_{r+1} <= binom(x, r+1) with binom(x, r) = |E|. A shortfall below 1e-6 of the
/// bound is inconclusive; empty F passes vacuously.
CheckReport kk_clique_bound_check(const Hypergraph& f);

struct ParitySplit {
    std::uint64_t even_sum; // Σ_{i even} binom(a, r-i) binom(b, i)
    std::uint64_t odd_sum;
};

ParitySplit parity_split_sums(int a, int b, int r);

/// [z^r] (1+z)^a (1-z)^b by truncated polynomial multiplication.
std::int64_t signed_coefficient(int a, int b, int r);

/// Vandermonde total and the signed-coefficient difference.
std::vector<CheckReport> parity_split_check(int a, int b, int r);

/// |exact - n^r/(2 r!) (1 ± (2c-1)^r)| <= 2^r r n^(r-1), for the even and odd sums.
/// Throws InvalidInput unless 0 <= c <= 1 and cn is an integer.
std::vector<CheckReport> evensum_asymptotic_check(double c, int r, int n);

/// 1 - alpha^(1/r) >= (1 - alpha)/r for alpha in [0, 1], r >= 1.
CheckReport root_inequality_check(double alpha, int r);

/// df_pair_sum(F) against alpha(1 - alpha) binom(n, r+1), alpha = min(rho, 1 - rho).
/// Informational at small n: the lower bound needs n large.
CheckReport df_sum_lower_bound_report(const Hypergraph& f);

/// If min_{l'} >= x binom(n-l', k-l') then min_l >= x binom(n-l, k-l) for l <= l', with
/// x = min_{l'} / binom(n-l', k-l'). Compared exactly by cross-multiplication.
CheckReport degree_monotonicity_check(const Hypergraph& h, int l, int l_prime);

} // namespace hyperthresh
