#include "spinga/selftest.hpp"

#include <algorithm>

#include "spinga/rng.hpp"

namespace spinga {

double AlgebraReport::max_error() const {
    return std::max({associativity, metric, centrality, reverse_anti});
}

namespace {

Multivector<double> random_mv(const Algebra& alg, Rng& rng) {
    Multivector<double> m(alg);
    for (unsigned i = 0; i < alg.size(); ++i) m[i] = rng.uniform(-1.0, 1.0);
    return m;
}

double max_abs_diff(const Multivector<double>& a, const Multivector<double>& b) {
    return (a - b).max_abs();
}

}  // namespace

AlgebraReport algebra_selftest(const Algebra& alg, std::uint64_t seed, int samples) {
    Rng rng(seed);
    AlgebraReport r{0.0, 0.0, 0.0, 0.0};

    for (int g = 0; g < alg.dim(); ++g) {
        const auto e = Multivector<double>::blade(alg, 1u << g, 1.0);
        const auto sq = e * e;
        r.metric = std::max(r.metric, std::abs(sq.scalar_part() - alg.metric_sign(g)));
        for (unsigned i = 1; i < alg.size(); ++i)
            r.metric = std::max(r.metric, std::abs(sq[i]));
    }

    const auto pseudo = Multivector<double>::blade(alg, alg.pseudoscalar_mask(), 1.0);
    for (unsigned b = 0; b < alg.size(); ++b) {
        const auto blade = Multivector<double>::blade(alg, b, 1.0);
        r.centrality = std::max(r.centrality, (pseudo * blade - blade * pseudo).max_abs());
    }

    for (int n = 0; n < samples; ++n) {
        const auto a = random_mv(alg, rng);
        const auto b = random_mv(alg, rng);
        const auto c = random_mv(alg, rng);
        r.associativity = std::max(r.associativity, max_abs_diff((a * b) * c, a * (b * c)));
        r.reverse_anti =
            std::max(r.reverse_anti, max_abs_diff((a * b).reversed(), b.reversed() * a.reversed()));
    }
    return r;
}

}  // namespace spinga
