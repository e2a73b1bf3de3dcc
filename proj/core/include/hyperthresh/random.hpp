#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyperthresh/vertex_set.hpp"

namespace hyperthresh {

/// Seeded generator with distribution helpers whose output depends only on the
/// seed (std::*_distribution results vary between standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    /// Uniform random `size`-subset of `universe`.
    VertexSet subset(VertexSet universe, int size);

private:
    std::mt19937_64 engine_;
};

} // namespace hyperthresh
