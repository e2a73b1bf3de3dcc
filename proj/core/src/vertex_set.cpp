#include "hyperthresh/vertex_set.hpp"

#include <sstream>

#include "hyperthresh/error.hpp"

namespace hyperthresh {

VertexSet VertexSet::from_indices(std::span<const int> indices)
{
    Mask mask = 0;
    int prev = -1;
    for (int v : indices) {
        if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex index " + std::to_string(v) + " out of range");
        if (v <= prev) throw InvalidInput("vertex indices must be strictly increasing");
        mask |= Mask{1} << v;
        prev = v;
    }
    return VertexSet(mask);
}

VertexSet VertexSet::from_indices(std::initializer_list<int> indices)
{
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
}

std::vector<int> VertexSet::indices() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b)
{
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    const Mask diff = a.mask_ ^ b.mask_;
    const Mask low = diff & (~diff + 1);
    // Both lists agree below `low`. The one holding `low` is smaller unless
    // the other has run out of elements, in which case the other is a prefix.
    const Mask above = ~((low << 1) - 1);
    if (a.mask_ & low) return (b.mask_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
    return (a.mask_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string to_string(VertexSet s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s.indices()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<int> members(VertexSet universe) { return universe.indices(); }

std::vector<VertexSet> subsets(VertexSet universe, int size)
{
    std::vector<VertexSet> out;
    for_each_subset(universe, size, [&](VertexSet s) { out.push_back(s); });
    return out;
}

} // namespace hyperthresh
