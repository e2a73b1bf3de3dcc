#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperthresh/hypergraph.hpp"
#include "hyperthresh/matching.hpp"

namespace hyperthresh {

/// S absorbs Q: both H[S] and H[S ∪ Q] have perfect matchings.
struct AbsorptionCertificate {
    VertexSet q;
    VertexSet s;
    Matching pm_s;
    Matching pm_sq;
};

/// Exact check with the matching solver. Throws InvalidInput unless S and Q
/// are disjoint and both |S| and |S ∪ Q| are multiples of k.
std::optional<AbsorptionCertificate> is_absorbing(const Hypergraph& h, VertexSet s, VertexSet q);

/// Labelled split of a k-set Q into x (r' = floor(k/2) vertices) and y (r = ceil(k/2) vertices).
struct QSplit {
    VertexSet x;
    VertexSet y;

    VertexSet q() const { return x | y; }
    friend bool operator==(const QSplit&, const QSplit&) = default;
};

int absorber_r(int k);       // ceil(k/2)
int absorber_r_prime(int k); // floor(k/2)

/// x = the r' smallest vertices of Q, y = the rest.
QSplit default_split(VertexSet q, int k);

/// All binom(k, r') splits of Q, x in lexicographic order.
std::vector<QSplit> all_splits(VertexSet q, int k);

/// One edge x'y' with x ∪ x' and y ∪ y' also edges (|x'| = r, |y'| = r').
struct KAbsorber {
    VertexSet set;
    QSplit split;
    VertexSet x_prime;
    VertexSet y_prime;

    Matching matching_of_set() const;           // {x'y'}
    Matching matching_with_q() const;           // {x x', y y'}
};

/// Vertices x' (r), y' (r'), w' (r'), z' (r) with edges x'w', y'z', w'z', x x', y y'.
struct TwoKAbsorber {
    VertexSet set;
    QSplit split;
    VertexSet x_prime;
    VertexSet y_prime;
    VertexSet w_prime;
    VertexSet z_prime;

    Matching matching_of_set() const;           // {x'w', y'z'}
    Matching matching_with_q() const;           // {x x', y y', w'z'}
};

struct AbsorberQuery {
    std::optional<QSplit> split;  // default_split(Q) when empty
    bool union_all_splits = false;
    VertexSet forbidden;          // absorbers must avoid these vertices
    std::size_t budget = 0;       // cap on distinct absorber sets; 0: unlimited
};

template <typename Absorber>
struct AbsorberList {
    std::vector<Absorber> absorbers;  // one witness per distinct set, sets in lexicographic order
    std::uint64_t labeled_count = 0;  // labelled structures seen, before de-duplication
    bool truncated = false;           // budget reached
};

/// Throws InvalidInput unless |Q| = k >= 2 and the split (if given) is a valid split of Q.
AbsorberList<KAbsorber> enumerate_absorbing_ksets(const Hypergraph& h, VertexSet q, const AbsorberQuery& query = {});
AbsorberList<TwoKAbsorber> enumerate_absorbing_2ksets(const Hypergraph& h, VertexSet q, const AbsorberQuery& query = {});

/// An absorber added to the absorbing matching, and the set it was drawn for.
struct AbsorberRecord {
    VertexSet q;
    VertexSet s;
    int size; // k or 2k
    std::vector<VertexSet> edges;
};

struct AbsorberAvailability {
    VertexSet q;
    std::uint64_t k_absorbers;
    std::uint64_t two_k_absorbers;
    bool truncated;
};

struct AbsorbingMatchingOptions {
    double xi = 0.1;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 0;    // random Q draws; 0: 8n
    std::size_t per_q_budget = 256;  // cap on absorbers counted per Q
};

struct AbsorbingMatching {
    Matching matching;
    std::size_t cap = 0; // floor(xi n / k)
    std::size_t attempts = 0;
    std::vector<AbsorberRecord> records;
    std::vector<AbsorberAvailability> availability;
};

/// Greedy stand-in for the absorbing matching: for random k-sets Q outside the
/// matching so far, adds one structured absorber (k-absorbers preferred) that
/// avoids the matching, until |M| reaches floor(xi n / k) or attempts run out.
AbsorbingMatching build_absorbing_matching(const Hypergraph& h, const AbsorbingMatchingOptions& options);

struct PipelineParams {
    double xi = 0.1;
    double gamma = 0.05;
    std::uint64_t seed = 0;
    bool fallback = true;
    std::uint64_t node_budget = 0; // exact searches; 0: unlimited
    std::size_t max_attempts = 0;
};

enum class PipelineStatus {
    perfect,          // absorption pipeline produced the matching
    perfect_fallback, // absorption failed, the exact solver found one
    no_perfect,       // exact solver proved none exists
    failed,           // absorption failed and fallback disabled
    aborted           // an exact search ran out of budget
};

std::string to_string(PipelineStatus s);

struct PipelineReport {
    PipelineParams params;
    int n = 0;
    int k = 0;
    std::size_t absorbing_size = 0;      // edges of M
    std::size_t absorbing_cap = 0;
    std::vector<AbsorberRecord> absorbers;
    std::size_t greedy_size = 0;         // edges of M'
    std::size_t leftover = 0;            // |W|
    std::size_t chunks = 0;              // |W| / k
    bool leftover_divisible = true;      // |W| ≡ 0 (mod k) on entry to absorption
    bool absorbed = false;
    bool fallback_used = false;
    bool truncated = false;
    std::uint64_t search_nodes = 0;
    PipelineStatus status = PipelineStatus::failed;
    Matching matching;                   // perfect when status is perfect or perfect_fallback
    double absorbing_ms = 0;
    double greedy_ms = 0;
    double absorption_ms = 0;
    double fallback_ms = 0;
};

/// Absorbing matching, greedy matching on the rest, exact re-solve of
/// H[V(M) ∪ W] for the leftover W, optional exact fallback on H.
/// Throws InvalidInput unless k | n.
PipelineReport pm_via_absorption(const Hypergraph& h, const PipelineParams& params);

} // namespace hyperthresh
