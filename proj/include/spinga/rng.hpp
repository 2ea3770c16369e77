#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace spinga {

/// splitmix64 generator. Chosen over std engines because the exact double
/// stream must be reproducible byte-for-byte across platforms; the standard
/// distributions do not guarantee that.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform on the unit sphere.
    std::array<double, 3> unit_vector() {
        const double z = 2.0 * uniform01() - 1.0;
        const double phi = 2.0 * std::numbers::pi * uniform01();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

private:
    std::uint64_t state_;
};

}  // namespace spinga
