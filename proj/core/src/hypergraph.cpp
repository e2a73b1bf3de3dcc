#include "hyperthresh/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"
#include "hyperthresh/random.hpp"

namespace hyperthresh {

namespace {

// Cap on explicitly materialized families of subsets (edge lists, degree tables).
constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 27;

void require_materializable(int n, int size, const char* what)
{
    if (binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(size)) > kMaterializeLimit)
        throw InvalidInput(std::string(what) + ": binom(" + std::to_string(n) + "," + std::to_string(size) +
                           ") subsets is beyond the supported size");
}

void check_query(const Hypergraph& h, VertexSet s)
{
    if (s.size() > h.k())
        throw InvalidQuery("query set " + to_string(s) + " larger than uniformity " + std::to_string(h.k()));
    if (!s.subset_of(h.vertices())) throw InvalidQuery("query set " + to_string(s) + " not inside the vertex set");
}

} // namespace

Hypergraph::Hypergraph(int n, int k, std::vector<VertexSet> edges) : n_(n), k_(k), edges_(std::move(edges))
{
    if (n < 1 || n > kMaxVertices) throw InvalidInput("vertex count must lie in [1, 64], got " + std::to_string(n));
    if (k < 1 || k > n) throw InvalidInput("uniformity must lie in [1, n], got " + std::to_string(k));
    const VertexSet all = vertices();
    for (VertexSet e : edges_) {
        if (e.size() != k) throw InvalidInput("edge " + to_string(e) + " does not have " + std::to_string(k) + " vertices");
        if (!e.subset_of(all)) throw InvalidInput("edge " + to_string(e) + " leaves the vertex set");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw InvalidInput("duplicate edge " + to_string(*dup));
    sorted_masks_.reserve(edges_.size());
    for (VertexSet e : edges_) sorted_masks_.push_back(e.mask());
    std::sort(sorted_masks_.begin(), sorted_masks_.end());
}

Hypergraph::Hypergraph(Trusted, int n, int k, std::vector<VertexSet> edges) : n_(n), k_(k), edges_(std::move(edges))
{
    std::sort(edges_.begin(), edges_.end());
    sorted_masks_.reserve(edges_.size());
    for (VertexSet e : edges_) sorted_masks_.push_back(e.mask());
    std::sort(sorted_masks_.begin(), sorted_masks_.end());
}

Hypergraph Hypergraph::complete(int n, int k)
{
    if (n < 1 || n > kMaxVertices || k < 1 || k > n) throw InvalidInput("complete hypergraph needs 1 <= k <= n <= 64");
    require_materializable(n, k, "complete hypergraph");
    return Hypergraph(n, k, subsets(VertexSet::prefix(n), k));
}

Hypergraph Hypergraph::empty(int n, int k) { return Hypergraph(n, k, {}); }

bool Hypergraph::is_edge(VertexSet e) const
{
    return std::binary_search(sorted_masks_.begin(), sorted_masks_.end(), e.mask());
}

std::uint64_t degree(const Hypergraph& h, VertexSet s)
{
    check_query(h, s);
    std::uint64_t d = 0;
    for (VertexSet e : h.edges())
        if (s.subset_of(e)) ++d;
    return d;
}

std::vector<std::uint64_t> l_degree_table(const Hypergraph& h, int l)
{
    if (l < 0 || l > h.k()) throw InvalidQuery("degree table needs 0 <= l <= k");
    require_materializable(h.n(), l, "degree table");
    std::vector<std::uint64_t> table(binom(static_cast<std::uint64_t>(h.n()), static_cast<std::uint64_t>(l)), 0);
    for (VertexSet e : h.edges())
        for_each_subset(e, l, [&](VertexSet s) { ++table[colex_rank(s)]; });
    return table;
}

std::uint64_t min_l_degree(const Hypergraph& h, int l)
{
    if (l < 0 || l >= h.k())
        throw InvalidQuery("minimum l-degree needs 0 <= l <= k-1, got l = " + std::to_string(l));
    if (l == 0) return h.edge_count();
    const auto table = l_degree_table(h, l);
    return *std::min_element(table.begin(), table.end());
}

std::vector<VertexSet> neighborhood(const Hypergraph& h, VertexSet s)
{
    check_query(h, s);
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        if (s.subset_of(e)) out.push_back(e - s);
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph complement(const Hypergraph& h)
{
    require_materializable(h.n(), h.k(), "complement");
    std::vector<VertexSet> edges;
    for_each_subset(h.vertices(), h.k(), [&](VertexSet e) {
        if (!h.is_edge(e)) edges.push_back(e);
    });
    return Hypergraph(Hypergraph::Trusted{}, h.n(), h.k(), std::move(edges));
}

Hypergraph induced(const Hypergraph& h, VertexSet a)
{
    if (!a.subset_of(h.vertices())) throw InvalidInput("induced: " + to_string(a) + " not inside the vertex set");
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        if (!e.subset_of(a)) continue;
        Mask relabelled = 0;
        for (int v : e.indices()) relabelled |= Mask{1} << a.rank_of(v);
        edges.push_back(VertexSet::from_mask(relabelled));
    }
    return Hypergraph(Hypergraph::Trusted{}, a.size(), h.k(), std::move(edges));
}

Hypergraph random_hypergraph(int n, int k, double p, std::uint64_t seed)
{
    if (n < 1 || n > kMaxVertices || k < 1 || k > n) throw InvalidInput("random hypergraph needs 1 <= k <= n <= 64");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
    require_materializable(n, k, "random hypergraph");
    Rng rng(seed);
    std::vector<VertexSet> edges;
    for_each_subset(VertexSet::prefix(n), k, [&](VertexSet e) {
        if (rng.bernoulli(p)) edges.push_back(e);
    });
    return Hypergraph(n, k, std::move(edges));
}

} // namespace hyperthresh
