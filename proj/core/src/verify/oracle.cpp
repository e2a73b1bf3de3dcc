#include "hyperthresh/verify/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "hyperthresh/extremal.hpp"

namespace hyperthresh::oracle {

namespace {

bool match_rec(const Hypergraph& h, VertexSet left, std::unordered_set<Mask>& dead)
{
    if (left.empty()) return true;
    if (dead.contains(left.mask())) return false;
    const int v = left.front();
    for (VertexSet e : h.edges()) {
        if (e.contains(v) && e.subset_of(left) && match_rec(h, left - e, dead)) return true;
    }
    dead.insert(left.mask());
    return false;
}

std::vector<Int128> binomial_row(int m, int sign)
{
    std::vector<Int128> row(static_cast<std::size_t>(m + 1), 0);
    row[0] = 1;
    for (int j = 1; j <= m; ++j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] * (m - j + 1) / j;
    if (sign < 0)
        for (int j = 1; j <= m; j += 2) row[static_cast<std::size_t>(j)] = -row[static_cast<std::size_t>(j)];
    return row;
}

} // namespace

std::uint64_t degree(const Hypergraph& h, VertexSet s)
{
    std::uint64_t count = 0;
    for_each_subset(h.vertices(), h.k(), [&](VertexSet e) {
        if (s.subset_of(e) && h.is_edge(e)) ++count;
    });
    return count;
}

std::uint64_t min_l_degree(const Hypergraph& h, int l)
{
    std::uint64_t best = UINT64_MAX;
    for_each_subset(h.vertices(), l, [&](VertexSet s) { best = std::min(best, oracle::degree(h, s)); });
    return best;
}

std::uint64_t threshold(int n, int k, int l)
{
    std::uint64_t best = 0;
    for (const auto& spec : hext_family(n, k)) best = std::max(best, oracle::min_l_degree(build(spec), l));
    return best;
}

bool has_perfect_matching(const Hypergraph& h, VertexSet within)
{
    if (within.size() % h.k() != 0) return false;
    std::unordered_set<Mask> dead;
    return match_rec(h, within, dead);
}

bool is_absorbing(const Hypergraph& h, VertexSet s, VertexSet q)
{
    return s.disjoint(q) && has_perfect_matching(h, s) && has_perfect_matching(h, s | q);
}

std::uint64_t generic_absorber_count(const Hypergraph& h, VertexSet q, int size)
{
    std::uint64_t count = 0;
    for_each_subset(h.vertices() - q, size, [&](VertexSet s) {
        if (is_absorbing(h, s, q)) ++count;
    });
    return count;
}

std::uint64_t aux_edge_count(const Hypergraph& h)
{
    const AuxShape s = aux_shape(h.n(), h.k());
    std::uint64_t count = 0;
    for_each_subset(h.vertices(), s.r, [&](VertexSet p) {
        for_each_subset(h.vertices(), s.r_prime, [&](VertexSet q) {
            if (p.disjoint(q) && h.is_edge(p | q)) ++count;
        });
    });
    return count;
}

std::uint64_t edit_distance_model(const Hypergraph& h, const PartitionColoring& c)
{
    std::uint64_t count = 0;
    for_each_subset(h.vertices(), c.shape.r, [&](VertexSet p) {
        for_each_subset(h.vertices(), c.shape.r_prime, [&](VertexSet q) {
            if (!p.disjoint(q)) return;
            const bool model = (c.in_x1(p) && c.in_y1(q)) || (!c.in_x1(p) && !c.in_y1(q));
            if (model != h.is_edge(p | q)) ++count;
        });
    });
    return count;
}

std::uint64_t bad_kset_count(const PartitionColoring& c)
{
    const VertexSet all = VertexSet::prefix(c.shape.n);
    std::set<Mask> with_adjacent;
    std::set<Mask> with_apart;
    for_each_subset(all, c.shape.r, [&](VertexSet p) {
        for_each_subset(all, c.shape.r_prime, [&](VertexSet q) {
            if (!p.disjoint(q)) return;
            const bool model = (c.in_x1(p) && c.in_y1(q)) || (!c.in_x1(p) && !c.in_y1(q));
            (model ? with_adjacent : with_apart).insert((p | q).mask());
        });
    });
    std::uint64_t count = 0;
    for (Mask m : with_adjacent)
        if (with_apart.contains(m)) ++count;
    return count;
}

CdCounts cd_counts(const PartitionColoring& c, int u, int v)
{
    const VertexSet all = VertexSet::prefix(c.shape.n);
    const VertexSet uv = VertexSet::singleton(u) | VertexSet::singleton(v);
    CdCounts out{0, 0, 0, 0};
    for_each_subset(all, c.shape.r + 1, [&](VertexSet s) {
        if (!uv.subset_of(s)) return;
        const bool same = c.in_x1(s - VertexSet::singleton(u)) == c.in_x1(s - VertexSet::singleton(v));
        ++(same ? out.c : out.d);
    });
    for_each_subset(all, c.shape.r_prime + 1, [&](VertexSet s) {
        if (!uv.subset_of(s)) return;
        const bool same = c.in_y1(s - VertexSet::singleton(u)) == c.in_y1(s - VertexSet::singleton(v));
        ++(same ? out.c_prime : out.d_prime);
    });
    return out;
}

std::vector<std::uint64_t> t_profile(const Hypergraph& f)
{
    const int r = f.k();
    std::vector<std::uint64_t> t(static_cast<std::size_t>(r + 2), 0);
    for_each_subset(f.vertices(), r + 1, [&](VertexSet s) {
        const auto inside = std::count_if(f.edges().begin(), f.edges().end(), [&](VertexSet e) { return e.subset_of(s); });
        ++t[static_cast<std::size_t>(inside)];
    });
    return t;
}

std::uint64_t df_pair_sum(const Hypergraph& f)
{
    std::uint64_t total = 0;
    for_each_subset(f.vertices(), f.k() + 1, [&](VertexSet s) {
        const auto idx = s.indices();
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j) {
                const bool a = f.is_edge(s - VertexSet::singleton(idx[i]));
                const bool b = f.is_edge(s - VertexSet::singleton(idx[j]));
                if (a != b) ++total;
            }
    });
    return total;
}

Int128 signed_coefficient(int a, int b, int r)
{
    const auto plus = binomial_row(a, 1);
    const auto minus = binomial_row(b, -1);
    Int128 total = 0;
    for (int i = 0; i <= a; ++i) {
        const int j = r - i;
        if (j >= 0 && j <= b) total += plus[static_cast<std::size_t>(i)] * minus[static_cast<std::size_t>(j)];
    }
    return total;
}

} // namespace hyperthresh::oracle
