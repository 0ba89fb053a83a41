#pragma once

#include "gmprune/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gmprune {

/*
 * Seeded random source used by every stochastic operation in the library.
 *
 * std::mt19937_64 output is pinned by the standard, but the std <random>
 * distributions are implementation-defined, so all derived draws (bounded
 * ints, uniforms, normals) are generated here. Identical seeds therefore
 * produce identical datasets, subsamples and selections on any platform.
 */
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Unbiased integer in [0, bound) via rejection sampling. bound > 0.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal via the Marsaglia polar method (caches the spare).
    double normal();

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Fisher-Yates permutation of 0..n-1.
std::vector<Index> random_permutation(Index n, SeededRng& rng);

/// k distinct indices from 0..n-1, uniformly without replacement, in
/// selection order (partial Fisher-Yates).
std::vector<Index> sample_without_replacement(Index n, Index k, SeededRng& rng);

}  // namespace gmprune
