#pragma once

#include <array>
#include <cstdint>

#include "prodhawkes/types.hpp"

namespace prodhawkes {

/// Stochastic Kronecker seed: 2x2 probability matrix (row-major) and the
/// number of Kronecker iterations; the sampled graph has 2^iterations nodes.
struct KroneckerSeed {
    std::array<double, 4> theta{0.0, 0.0, 0.0, 0.0};
    unsigned iterations{1};
};

/// Samples a directed graph: pair (i, j), i != j, becomes an edge with
/// probability prod_level theta[bit_level(i)][bit_level(j)], independently.
/// The generated edge i -> j is stored with j observing i. Deterministic
/// for a given rng_seed. Throws std::domain_error on probabilities outside
/// [0, 1] or iterations == 0.
Network kronecker_generate(const KroneckerSeed& seed, std::uint64_t rng_seed);

/// Inclusion probability of the ordered pair (i, j) under the seed.
double kronecker_edge_probability(const KroneckerSeed& seed, std::uint32_t i, std::uint32_t j);

}  // namespace prodhawkes
