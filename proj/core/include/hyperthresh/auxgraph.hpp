#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperthresh/extremal.hpp"
#include "hyperthresh/hypergraph.hpp"

namespace hyperthresh {

/// Side sizes of the auxiliary bipartite graph G(H): r-subsets against
/// r'-subsets of [0, n), r = ceil(k/2), r' = k - r. Subsets are indexed by colex rank.
struct AuxShape {
    int n;
    int k;
    int r;
    int r_prime;
    std::uint64_t big_n;       // binom(n, r)
    std::uint64_t big_n_prime; // binom(n, r')
};

/// Throws InvalidInput unless 2 <= k <= n.
AuxShape aux_shape(int n, int k);

/// P ∩ P' = ∅ and P ∪ P' ∈ E(H). Throws InvalidInput unless |P| = r and |P'| = r'.
bool aux_adjacent(const Hypergraph& h, VertexSet p, VertexSet p_prime);

/// Number of edges of G(H), summed over r-sets P of |N_G(P)|.
std::uint64_t aux_edge_count(const Hypergraph& h);

/// Explicit edge list (P, P'), P-major in colex order. Refuses n > 12.
std::vector<std::pair<VertexSet, VertexSet>> aux_edges(const Hypergraph& h);

/// Two-colouring of all r-subsets (phi: X1/X2) and all r'-subsets (psi: Y1/Y2).
struct PartitionColoring {
    AuxShape shape;
    std::vector<std::uint8_t> phi; // 1: X1, 0: X2; indexed by colex rank
    std::vector<std::uint8_t> psi; // 1: Y1, 0: Y2

    bool in_x1(VertexSet p) const;
    bool in_y1(VertexSet p_prime) const;
    std::uint64_t x1_size() const;
    std::uint64_t y1_size() const;
};

/// Model B_{n,k}: (P, P') adjacent iff disjoint and both in class 1 or both in class 2.
bool model_adjacent(const PartitionColoring& c, VertexSet p, VertexSet p_prime);

/// Colouring read off a vertex set A. X1 = r-sets meeting A oddly. Y1 = r'-sets
/// meeting A evenly (kind odd) or oddly (kind even), so the model's edges are
/// exactly the k-sets meeting A with the given parity.
PartitionColoring parity_coloring(int n, int k, VertexSet a, Kind kind = Kind::odd);

PartitionColoring constant_coloring(int n, int k, bool x1, bool y1);

/// Each subset independently in class 1 with probability 1/2.
PartitionColoring random_coloring(int n, int k, std::uint64_t seed);

/// |E(G(H)) △ E(model)|.
std::uint64_t edit_distance_model(const Hypergraph& h, const PartitionColoring& c);

/// k-sets with one model-adjacent split and one model-non-adjacent split.
/// Depends on the colouring alone.
std::uint64_t bad_kset_count(const PartitionColoring& c);

/// r-sets a with |N_G(a) ∩ N_G(b)| >= gamma N'. Throws InvalidInput unless |b| = r and 0 < gamma < 1.
std::uint64_t good_rtuple_count(const Hypergraph& h, VertexSet b, double gamma);

/// Every r-set b has at least (1/2 + gamma) N good partners.
bool case_a(const Hypergraph& h, double gamma);

/// r'-sets a with d_H(a) >= (1/2 + gamma) N, in colex order.
std::vector<VertexSet> lambda_sets(const Hypergraph& h, double gamma);

/// |Lambda| >= 2 gamma N'.
bool case_b(const Hypergraph& h, double gamma);

struct DerivedPartition {
    VertexSet witness;                 // lexicographically first r-set with too few good partners
    std::uint64_t witness_good_count;
    std::vector<VertexSet> a_prime;    // r-sets; complement of a_dprime
    std::vector<VertexSet> a_dprime;   // r-sets x with |B' ∩ N_G(x)| < gamma N'
    std::vector<VertexSet> b_prime;    // r'-sets; N_G(witness)
    std::vector<VertexSet> b_dprime;
    std::vector<VertexSet> x_prime;    // ceil(N/2) r-sets, A' first
    std::vector<VertexSet> y_prime;    // ceil(N'/2) r'-sets, B' first
    PartitionColoring coloring;        // X1 = X', Y1 = Y'
    std::uint64_t e_xp_yp;             // e(X', Y')
    std::uint64_t e_xd_yd;             // e(X'', Y'')
    std::uint64_t e_xp_yd;             // e(X', Y'')
    std::uint64_t e_xd_yp;             // e(X'', Y')
    std::uint64_t edit_distance;       // against the derived colouring
};

/// Throws NotApplicable naming the case when case (a) or case (b) holds.
DerivedPartition derive_partition(const Hypergraph& h, double gamma);

struct CdCounts {
    std::uint64_t c;       // (r+1)-sets S ∋ u, v with phi(S - u) = phi(S - v)
    std::uint64_t d;       // ... with phi(S - u) != phi(S - v)
    std::uint64_t c_prime; // (r'+1)-sets with psi, likewise
    std::uint64_t d_prime;
};

/// Throws InvalidInput when u = v or either lies outside [0, n).
CdCounts cd_counts(const PartitionColoring& c, int u, int v);

struct StructureReport {
    int n = 0;
    int k = 0;
    double beta1 = 0;
    double small_r = 0;       // beta1 n^(r-1)
    double small_r_prime = 0; // beta1 n^(r'-1)
    int v0 = -1;
    VertexSet v0_class;       // V0: not consistent or not similar to v0
    VertexSet v1_class;       // contains v0
    VertexSet v2_class;
    std::uint64_t pairs = 0;
    std::uint64_t consistent_pairs = 0;
    std::uint64_t similar_pairs = 0;
    std::uint64_t consistent_similar_pairs = 0;
    std::vector<std::uint64_t> c_to_v0; // C(v, v0), 0 at v0
    std::vector<std::uint64_t> d_to_v0;
    double x1_agreement = 0;  // best fraction of r-sets whose phi matches the parity of |P ∩ V1|
    bool degenerate = false;  // binom(n-2, r-1) <= 2 beta1 n^(r-1)
    bool case_a = false;
    bool case_b = false;
    std::optional<std::uint64_t> bad_ksets;
    std::optional<std::uint64_t> edit_distance;
    std::vector<std::string> flags;
};

/// Consistent and similar pairs under the colouring, v0 (most consistent-and-similar
/// partners, lowest index on ties) and the classes V0, V1, V2. Throws InvalidInput
/// unless 0 < beta1 < 1.
StructureReport classify_pairs(const PartitionColoring& c, double beta1, int jobs = 1);

/// Cases (a)/(b) for H; when neither holds, derives a partition and classifies
/// pairs under it. Otherwise V0 is every vertex and the case is flagged.
StructureReport analyze_structure(const Hypergraph& h, double gamma, double beta1, int jobs = 1);

} // namespace hyperthresh
