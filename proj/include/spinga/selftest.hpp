#pragma once

#include <cstdint>

#include "spinga/algebra.hpp"

namespace spinga {

/// Maximum absolute deviations found by the randomized algebra suite.
struct AlgebraReport {
    double associativity;   // (ab)c vs a(bc) over random triples
    double metric;          // generator squares vs the metric signs
    double centrality;      // I b - b I over every basis blade
    double reverse_anti;    // reverse(ab) vs reverse(b) reverse(a)
    double max_error() const;
};

/// Seeded randomized checks of the core product identities; coefficients
/// are drawn uniformly from [-1, 1].
AlgebraReport algebra_selftest(const Algebra& alg, std::uint64_t seed, int samples);

}  // namespace spinga
