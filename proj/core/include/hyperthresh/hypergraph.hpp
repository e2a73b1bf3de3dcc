#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperthresh/vertex_set.hpp"

namespace hyperthresh {

/// A k-uniform hypergraph on the vertex set [0, n).
///
/// Immutable after construction. Edges are kept in lexicographic order so that
/// iteration (and everything built on it) is reproducible.
class Hypergraph {
public:
    /// Throws InvalidInput unless 1 <= k <= n <= 64, every edge has exactly k
    /// vertices in [0, n), and no edge repeats.
    Hypergraph(int n, int k, std::vector<VertexSet> edges);

    static Hypergraph complete(int n, int k);
    static Hypergraph empty(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const VertexSet> edges() const { return edges_; }
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    bool is_edge(VertexSet e) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    struct Trusted {};
    Hypergraph(Trusted, int n, int k, std::vector<VertexSet> edges);

    friend Hypergraph complement(const Hypergraph& h);
    friend Hypergraph induced(const Hypergraph& h, VertexSet a);

    int n_;
    int k_;
    std::vector<VertexSet> edges_;     // lexicographic
    std::vector<Mask> sorted_masks_;   // numeric, for membership
};

/// d_H(S): number of edges containing S. Throws InvalidQuery if |S| > k or S leaves [0, n).
std::uint64_t degree(const Hypergraph& h, VertexSet s);

/// Minimum of degree(h, S) over all l-sets S; |E(H)| for l = 0.
/// Throws InvalidQuery unless 0 <= l <= k-1.
std::uint64_t min_l_degree(const Hypergraph& h, int l);

/// Degree of every l-set, indexed by colex rank.
std::vector<std::uint64_t> l_degree_table(const Hypergraph& h, int l);

/// N_H(S): the (k-|S|)-sets T disjoint from S with S ∪ T an edge, in lexicographic order.
std::vector<VertexSet> neighborhood(const Hypergraph& h, VertexSet s);

/// Same vertex set, edge set binom(V, k) minus E(H).
Hypergraph complement(const Hypergraph& h);

/// H[A] relabelled onto [0, |A|) preserving order. No edges when |A| < k.
Hypergraph induced(const Hypergraph& h, VertexSet a);

/// Each k-set is an edge independently with probability p.
Hypergraph random_hypergraph(int n, int k, double p, std::uint64_t seed);

} // namespace hyperthresh
