#pragma once

#include <cstdint>
#include <vector>

#include "hyperthresh/auxgraph.hpp"
#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/hypergraph.hpp"

// Brute-force reference implementations. Each one takes a different route from
// the library code it checks and favours obviousness over speed.
namespace hyperthresh::oracle {

/// Counts k-supersets of S that are edges, scanning all k-sets.
std::uint64_t degree(const Hypergraph& h, VertexSet s);

/// Minimum of degree() over all l-sets.
std::uint64_t min_l_degree(const Hypergraph& h, int l);

/// Max over the family of brute min_l_degree(build(spec), l).
std::uint64_t threshold(int n, int k, int l);

/// Plain recursion on the lowest uncovered vertex over the full edge list.
bool has_perfect_matching(const Hypergraph& h, VertexSet within);

bool is_absorbing(const Hypergraph& h, VertexSet s, VertexSet q);

/// Sets S of the given size disjoint from Q with H[S] and H[S ∪ Q] perfectly matchable.
std::uint64_t generic_absorber_count(const Hypergraph& h, VertexSet q, int size);

/// Pairs (P, P') over all r-sets and r'-sets.
std::uint64_t aux_edge_count(const Hypergraph& h);

/// Symmetric difference by scanning all pairs (P, P').
std::uint64_t edit_distance_model(const Hypergraph& h, const PartitionColoring& c);

/// Distinct unions of an adjacent and a non-adjacent model pair.
std::uint64_t bad_kset_count(const PartitionColoring& c);

/// Scans all (r+1)- and (r'+1)-sets for those containing u and v.
CdCounts cd_counts(const PartitionColoring& c, int u, int v);

/// t_i from edge lists: for each (r+1)-set, counts edges contained in it.
std::vector<std::uint64_t> t_profile(const Hypergraph& f);

/// Sum over ordered (u, v), u < v, straight from the definition on (r+1)-sets.
std::uint64_t df_pair_sum(const Hypergraph& f);

/// [z^r] (1+z)^a (1-z)^b by full convolution of the two binomial rows.
Int128 signed_coefficient(int a, int b, int r);

} // namespace hyperthresh::oracle
