#include "prodhawkes/kronecker.hpp"

#include <cmath>
#include <stdexcept>

#include "prodhawkes/rng.hpp"

namespace prodhawkes {

namespace {

void check_seed(const KroneckerSeed& seed) {
    if (seed.iterations == 0) throw std::domain_error("iterations must be >= 1");
    if (seed.iterations >= 31) throw std::domain_error("iterations too large");
    for (double t : seed.theta) {
        if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
            throw std::domain_error("theta entries must lie in [0, 1]");
        }
    }
}

}  // namespace

double kronecker_edge_probability(const KroneckerSeed& seed, std::uint32_t i,
                                  std::uint32_t j) {
    double p = 1.0;
    for (unsigned level = 0; level < seed.iterations; ++level) {
        const unsigned bi = (i >> level) & 1u;
        const unsigned bj = (j >> level) & 1u;
        p *= seed.theta[bi * 2 + bj];
    }
    return p;
}

Network kronecker_generate(const KroneckerSeed& seed, std::uint64_t rng_seed) {
    check_seed(seed);
    const std::uint32_t n = 1u << seed.iterations;
    Rng rng(rng_seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double p = kronecker_edge_probability(seed, i, j);
            if (rng.uniform01() < p) {
                // Edge i -> j: j observes i.
                edges.emplace_back(i, j);
            }
        }
    }
    return Network(n, std::move(edges));
}

}  // namespace prodhawkes
