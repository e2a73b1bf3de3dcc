#include "hyperthresh/combinatorics.hpp"

#include <array>
#include <limits>
#include <string>

#include "hyperthresh/error.hpp"

namespace hyperthresh {

namespace {

constexpr int kTableSize = 65;

// binom(a, b) for a <= 64; every entry fits 64 bits (the largest is binom(64, 32)).
constexpr auto make_pascal()
{
    std::array<std::array<std::uint64_t, kTableSize>, kTableSize> t{};
    for (int a = 0; a < kTableSize; ++a) {
        t[a][0] = 1;
        for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
    }
    return t;
}

constexpr auto kPascal = make_pascal();

[[noreturn]] void overflow(const std::string& what) { throw ArithmeticOverflow(what + " exceeds 64-bit range"); }

} // namespace

std::uint64_t binom(std::uint64_t a, std::uint64_t b)
{
    if (b > a) return 0;
    if (a < kTableSize) return kPascal[a][b];
    if (b > a - b) b = a - b;
    UInt128 c = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        c = c * (a - b + i + 1) / (i + 1);
        if (c > std::numeric_limits<std::uint64_t>::max())
            overflow("binom(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    return static_cast<std::uint64_t>(c);
}

std::int64_t binom_signed(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || b > a) return 0;
    const std::uint64_t v = binom(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) overflow("signed binomial");
    return static_cast<std::int64_t>(v);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) overflow("sum");
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) overflow("product");
    return out;
}

std::uint64_t colex_rank(VertexSet s)
{
    std::uint64_t rank = 0;
    int i = 1;
    for (Mask m = s.mask(); m != 0; m &= m - 1, ++i) rank += kPascal[std::countr_zero(m)][i];
    return rank;
}

VertexSet colex_unrank(std::uint64_t rank, int size)
{
    Mask mask = 0;
    int hi = kMaxVertices - 1;
    for (int i = size; i >= 1; --i) {
        while (hi >= 0 && kPascal[hi][i] > rank) --hi;
        if (hi < 0) throw InvalidInput("colex rank out of range");
        mask |= Mask{1} << hi;
        rank -= kPascal[hi][i];
        --hi;
    }
    return VertexSet::from_mask(mask);
}

} // namespace hyperthresh
