#pragma once

#include <cstdint>

#include "hyperthresh/vertex_set.hpp"

namespace hyperthresh {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

/// Exact binomial coefficient; 0 when b > a.
/// Throws ArithmeticOverflow when the value exceeds 64 bits.
std::uint64_t binom(std::uint64_t a, std::uint64_t b);

/// Signed variant accepting negative arguments (0 outside 0 <= b <= a).
std::int64_t binom_signed(std::int64_t a, std::int64_t b);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Position of `s` among all |s|-subsets of [0, 64) in colex order.
/// Colex order restricted to subsets of [0, n) is a bijection onto [0, binom(n, |s|)).
std::uint64_t colex_rank(VertexSet s);

/// Inverse of colex_rank for subsets of the given size.
VertexSet colex_unrank(std::uint64_t rank, int size);

} // namespace hyperthresh
