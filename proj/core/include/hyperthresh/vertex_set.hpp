#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hyperthresh {

using Mask = std::uint64_t;

/// Largest supported vertex count; vertex sets are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64).
///
/// Backed by a bit mask. The public view is the strictly increasing index
/// list returned by indices(); ordering is lexicographic on that list.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_mask(Mask mask) { return VertexSet(mask); }

    /// Throws InvalidInput unless `indices` is strictly increasing within [0, 64).
    static VertexSet from_indices(std::span<const int> indices);
    static VertexSet from_indices(std::initializer_list<int> indices);

    /// The prefix {0, ..., count-1}.
    static constexpr VertexSet prefix(int count)
    {
        return VertexSet(count >= 64 ? ~Mask{0} : ((Mask{1} << count) - 1));
    }

    static constexpr VertexSet singleton(int v) { return VertexSet(Mask{1} << v); }

    constexpr Mask mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool disjoint(VertexSet other) const { return (mask_ & other.mask_) == 0; }

    /// Smallest element; undefined on the empty set.
    constexpr int front() const { return std::countr_zero(mask_); }

    std::vector<int> indices() const;

    /// Number of elements of this set that are smaller than v.
    constexpr int rank_of(int v) const { return std::popcount(mask_ & ((Mask{1} << v) - 1)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(mask_ | o.mask_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(mask_ & o.mask_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(mask_ & ~o.mask_); }
    constexpr VertexSet& operator|=(VertexSet o)
    {
        mask_ |= o.mask_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o)
    {
        mask_ &= ~o.mask_;
        return *this;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend std::strong_ordering operator<=>(VertexSet a, VertexSet b);

private:
    constexpr explicit VertexSet(Mask mask) : mask_(mask) {}

    Mask mask_ = 0;
};

/// "{0,1,2}"
std::string to_string(VertexSet s);

/// Elements of `universe` listed in increasing order.
std::vector<int> members(VertexSet universe);

/// Calls f(VertexSet) for every `size`-subset of `universe`, in lexicographic order.
template <typename F>
void for_each_subset(VertexSet universe, int size, F&& f)
{
    const std::vector<int> elems = members(universe);
    const int m = static_cast<int>(elems.size());
    if (size < 0 || size > m) return;
    if (size == 0) {
        f(VertexSet{});
        return;
    }
    std::vector<int> pos(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask mask = 0;
        for (int p : pos) mask |= Mask{1} << elems[static_cast<std::size_t>(p)];
        f(VertexSet::from_mask(mask));
        int i = size - 1;
        while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - size + i) --i;
        if (i < 0) return;
        ++pos[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All `size`-subsets of `universe` in lexicographic order.
std::vector<VertexSet> subsets(VertexSet universe, int size);

} // namespace hyperthresh
