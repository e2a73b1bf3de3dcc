#include "hyperthresh/random.hpp"

#include <utility>

#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"

namespace hyperthresh {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0) throw InvalidInput("Rng::below with zero bound");
    // Lemire's nearly-divisionless rejection.
    UInt128 m = static_cast<UInt128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<UInt128>(engine_()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

VertexSet Rng::subset(VertexSet universe, int size)
{
    std::vector<int> elems = members(universe);
    if (size < 0 || size > static_cast<int>(elems.size())) throw InvalidInput("subset size exceeds universe");
    Mask mask = 0;
    for (int i = 0; i < size; ++i) {
        const auto j = static_cast<std::size_t>(i) + below(elems.size() - static_cast<std::size_t>(i));
        std::swap(elems[static_cast<std::size_t>(i)], elems[j]);
        mask |= Mask{1} << elems[static_cast<std::size_t>(i)];
    }
    return VertexSet::from_mask(mask);
}

} // namespace hyperthresh
