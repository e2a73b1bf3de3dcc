#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperthresh/hypergraph.hpp"

namespace hyperthresh {

/// Which intersection parity with A the edges of a construction have.
enum class Kind { odd, even };

std::string to_string(Kind kind);
Kind kind_from_string(const std::string& s);

/// An ordered split (A, B) of [0, n) into two non-empty classes.
class Bipartition {
public:
    /// Throws InvalidInput unless A ⊆ [0, n) and both A and its complement are non-empty.
    Bipartition(int n, VertexSet a);

    /// A = {0, ..., size_a - 1}.
    static Bipartition canonical(int n, int size_a);

    int n() const { return n_; }
    VertexSet a() const { return a_; }
    VertexSet b() const { return VertexSet::prefix(n_) - a_; }
    int size_a() const { return a_.size(); }
    int size_b() const { return n_ - a_.size(); }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    int n_;
    VertexSet a_;
};

/// B_{n,k}(A,B) (kind odd: edges meet A oddly) or its complement (kind even).
struct ExtremalSpec {
    Kind kind;
    Bipartition part;
    int k;

    int n() const { return part.n(); }
    friend bool operator==(const ExtremalSpec&, const ExtremalSpec&) = default;
};

/// Whether the spec obeys the parity rules of the extremal family (requires k | n).
bool in_extremal_family(const ExtremalSpec& spec);

/// Edges are exactly the k-sets whose intersection with A has the spec's parity.
Hypergraph build(const ExtremalSpec& spec);

/// Number of edges of build(spec), without materializing it.
std::uint64_t extremal_edge_count(const ExtremalSpec& spec);

/// One spec per admissible |A| and kind with canonical A = {0..|A|-1}, sorted by (|A|, kind).
/// Throws InvalidInput unless k >= 2 and k | n.
std::vector<ExtremalSpec> hext_family(int n, int k);

/// Minimum l-degree of build(spec) from the intersection-profile formula.
std::uint64_t min_l_degree_closed(const ExtremalSpec& spec, int l);

/// l-degree of an l-set meeting A in `profile` vertices.
std::uint64_t profile_degree(const ExtremalSpec& spec, int l, int profile);

struct ThresholdRow {
    ExtremalSpec spec;
    std::uint64_t min_degree;
};

struct ThresholdReport {
    int n;
    int k;
    int l;
    std::uint64_t value;                 // max of min l-degree over the family
    std::vector<ExtremalSpec> witnesses; // specs attaining value
    std::vector<ThresholdRow> table;     // sorted by (|A|, kind)
};

/// Throws InvalidInput unless k | n, k >= 2 and 1 <= l <= k-1.
ThresholdReport threshold(int n, int k, int l);

/// An exact value with denominator 1 or 2, stored as twice the value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(std::int64_t twice)
    {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInteger from_int(std::int64_t v) { return from_twice(2 * v); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Largest integer not above the value.
    constexpr std::int64_t floor() const { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }
    double to_double() const { return static_cast<double>(twice_) / 2.0; }

    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
    std::int64_t twice_ = 0;
};

std::string to_string(HalfInteger h);

/// Closed form of the codegree threshold (l = k-1) by the four-case rule on
/// k/2, n/k and (n-1)/2. Throws InvalidInput unless k >= 3 and k | n.
HalfInteger threshold_codegree_formula(int n, int k);

struct ParityCertificate {
    int edges_in_matching;   // n/k
    int forced_sum_parity;   // parity of sum |e ∩ A| over any perfect matching
    int size_a_parity;       // parity of |A|
    bool no_perfect_matching;
    std::string reason;
};

/// Parity argument ruling out a perfect matching. Throws NotApplicable when
/// the spec is outside the extremal family, InvalidInput when n_over_k is wrong.
ParityCertificate no_pm_certificate(const ExtremalSpec& spec, int n_over_k);

/// |E(H) △ E(build(spec))|. Throws InvalidInput on mismatched n or k.
std::uint64_t closeness(const Hypergraph& h, const ExtremalSpec& spec);

enum class ClosenessMode { exact, heuristic };

struct ClosenessResult {
    Bipartition part;
    std::uint64_t edits;
    bool exact; // false: local-search upper bound
};

/// Minimum of closeness over bipartitions with |A| ∈ {floor(n/2), ceil(n/2)}.
/// Exact mode enumerates every such A and requires n <= 16.
ClosenessResult closeness_min(const Hypergraph& h, Kind kind, ClosenessMode mode, int jobs = 1);

} // namespace hyperthresh
