#include "spinga/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace spinga {

namespace {

int base_sign(int mu, BellVariant variant, bool config_b) {
    if (variant == BellVariant::y_double_prime) return config_b ? (mu == 1 ? -1 : +1)
                                                                : (mu == 1 ? +1 : -1);
    return (mu <= 1) ? +1 : -1;
}

PhasedSpin base_spin(int sign, const PhaseVar& phase) {
    const PhasedSpin up = make_spin(SpinDirection::up, phase);
    return sign > 0 ? up : negated(up);
}

double scalar_product(const Vec3& a, const Vec3& b) {
    return (to_sigma(a) * to_sigma(b)).scalar_part();
}

}  // namespace

BellPair bell_state(int mu, BellVariant variant) {
    if (mu < 0 || mu > 3) throw std::out_of_range("Bell index must be 0..3");
    if (variant == BellVariant::y_double_prime && mu != 1 && mu != 2)
        throw std::invalid_argument("the double-prime form exists only for mu = 1, 2");
    const PhaseVar phase = fresh_phase();
    const int sa = base_sign(mu, variant, false);
    const int sb = base_sign(mu, variant, true);
    const PhasedSpin fa = base_spin(sa, phase);
    const PhasedSpin fb = base_spin(sb, phase);
    return BellPair{mu,
                    variant,
                    phase,
                    {fa, improper_map(fa, mu)},
                    {improper_map(fb, mu), fb},
                    sa,
                    sb};
}

Vec3 improper_image(int mu, const Vec3& w) {
    return from_sigma(sandwich(improper_reflector(mu), to_sigma(w), true));
}

TotalSpin total_spin(const BellPair& b) {
    double square = 0.0;
    double mean_sq = 0.0;
    Multivector<TrigPoly> sum_a(Algebra::sigma());
    for (const auto* pair : {&b.pair_a, &b.pair_b}) {
        const auto total = (*pair)[0].mv() + (*pair)[1].mv();
        if (pair == &b.pair_a) sum_a = total;
        square += 0.5 * (total * total).scalar_part().expect_all().constant_term();
        const Vec3 observed = from_sigma(expect_all(total));
        mean_sq += 0.5 * dot(observed, observed);
    }
    return TotalSpin{sum_a, square, mean_sq};
}

double intrinsic_correlation(const BellPair& b) {
    double value = 0.0;
    for (const auto* pair : {&b.pair_a, &b.pair_b}) {
        const TrigPoly prod = ((*pair)[0].mv() * (*pair)[1].mv()).scalar_part();
        value += 0.5 * 2.0 * prod.expect_all().constant_term();
    }
    return value;
}

namespace {

struct RealizedConfigs {
    Vec3 a1, a2, b1, b2;
};

// Stern-Gerlach realizations of the two superposed configurations: the
// partner detector picks up the improper rotation, the base sign multiplies
// both members of its configuration.
RealizedConfigs realize(const BellPair& b, const Vec3& u, const Vec3& v) {
    const double sa = b.base_sign_a;
    const double sb = b.base_sign_b;
    const Vec3 vu = improper_image(b.mu, u);
    const Vec3 vv = improper_image(b.mu, v);
    return RealizedConfigs{{sa * u[0], sa * u[1], sa * u[2]},
                           {sa * vv[0], sa * vv[1], sa * vv[2]},
                           {sb * vu[0], sb * vu[1], sb * vu[2]},
                           {sb * v[0], sb * v[1], sb * v[2]}};
}

void require_unit_pair(const Vec3& u, const Vec3& v) {
    if (std::abs(norm(u) - 1.0) > 1e-9 || std::abs(norm(v) - 1.0) > 1e-9)
        throw std::invalid_argument("detector directions must be unit vectors");
}

}  // namespace

double bipartite_expectation(const BellPair& b, const Vec3& u, const Vec3& v) {
    require_unit_pair(u, v);
    const RealizedConfigs r = realize(b, u, v);
    return 0.5 * (scalar_product(r.a1, r.a2) + scalar_product(r.b1, r.b2));
}

double bipartite_expectation_bivector(const BellPair& b, const Vec3& u, const Vec3& v) {
    require_unit_pair(u, v);
    // <(s3 u)^dagger s3 (I s_mu v I s_mu)>_0; the base signs square away.
    const auto s3 = sigma_vector(3);
    const auto refl = improper_reflector(b.mu);
    const auto left = (s3 * to_sigma(u)).reversed();
    const auto right = s3 * refl * to_sigma(v) * refl;
    return (left * right).scalar_part();
}

double bipartite_expectation_alt(const BellPair& b, const Vec3& u, const Vec3& v) {
    require_unit_pair(u, v);
    const RealizedConfigs r = realize(b, u, v);
    const auto sum = to_sigma(r.a1) * to_sigma(r.a2) + to_sigma(r.b1) * to_sigma(r.b2);
    return 0.5 * sum.scalar_part();
}

double bipartite_closed_form(int mu, const Vec3& u, const Vec3& v) {
    if (mu < 0 || mu > 3) throw std::out_of_range("Bell index must be 0..3");
    if (mu == 0) return -dot(u, v);
    return dot(u, v) - 2.0 * u[static_cast<std::size_t>(mu - 1)] * v[static_cast<std::size_t>(mu - 1)];
}

double partial_expectation(const BellPair& b, const Vec3& direction, int which) {
    if (which != 1 && which != 2) throw std::out_of_range("which must be 1 or 2");
    if (std::abs(norm(direction) - 1.0) > 1e-9)
        throw std::invalid_argument("detector direction must be a unit vector");
    const auto s3 = sigma_vector(3);
    const Vec3 refl = improper_image(b.mu, direction);
    const double da = (which == 1) ? b.base_sign_a * (s3 * to_sigma(direction)).scalar_part()
                                   : b.base_sign_a * (s3 * to_sigma(refl)).scalar_part();
    const double db = (which == 1) ? b.base_sign_b * (s3 * to_sigma(refl)).scalar_part()
                                   : b.base_sign_b * (s3 * to_sigma(direction)).scalar_part();
    return 0.5 * (da + db);
}

SeparableExpectation separable_expectation(SeparableKind kind, const Vec3& u, const Vec3& v) {
    require_unit_pair(u, v);
    const auto neg = [](const Vec3& w) { return Vec3{-w[0], -w[1], -w[2]}; };
    Vec3 a1, a2, b1, b2;
    switch (kind) {
        case SeparableKind::up_down:
            a1 = u;
            a2 = improper_image(0, v);
            b1 = neg(improper_image(3, u));
            b2 = neg(v);
            break;
        case SeparableKind::down_up:
            a1 = improper_image(0, u);
            a2 = v;
            b1 = improper_image(3, u);
            b2 = v;
            break;
        case SeparableKind::up_up:
            a1 = u;
            a2 = improper_image(1, v);
            b1 = improper_image(2, u);
            b2 = v;
            break;
        case SeparableKind::down_down:
            a1 = neg(u);
            a2 = neg(improper_image(1, v));
            b1 = neg(improper_image(2, u));
            b2 = neg(v);
            break;
    }
    const auto s3 = sigma_vector(3);
    SeparableExpectation out{};
    out.bipartite = 0.5 * (scalar_product(a1, a2) + scalar_product(b1, b2));
    out.partial_1 = 0.5 * ((s3 * to_sigma(a1)).scalar_part() + (s3 * to_sigma(b1)).scalar_part());
    out.partial_2 = 0.5 * ((s3 * to_sigma(a2)).scalar_part() + (s3 * to_sigma(b2)).scalar_part());
    return out;
}

Gram4 spinor_bell_gram(bool full) {
    Gram4 g{};
    if (full) {
        const PhaseVar phase = fresh_phase();
        std::array<Multivector<TrigPoly>, 4> left{
            Multivector<TrigPoly>(Algebra::sigma()), Multivector<TrigPoly>(Algebra::sigma()),
            Multivector<TrigPoly>(Algebra::sigma()), Multivector<TrigPoly>(Algebra::sigma())};
        std::array<Multivector<TrigPoly>, 4> right = left;
        for (int mu = 0; mu < 4; ++mu) {
            const PhasedSpin f = base_spin(base_sign(mu, BellVariant::y, false), phase);
            const auto refl = to_ring<TrigPoly>(improper_reflector(mu));
            const auto s_mu = to_ring<TrigPoly>(
                mu == 0 ? Multivector<double>::scalar(Algebra::sigma(), 1.0) : sigma_vector(mu));
            left[static_cast<std::size_t>(mu)] = -(refl * f.mv());
            right[static_cast<std::size_t>(mu)] = refl * (s_mu * f.mv() * s_mu);
        }
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const auto prod = left[static_cast<std::size_t>(mu)].reversed() *
                                  right[static_cast<std::size_t>(nu)];
                g[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
                    prod.scalar_part().expect_all().constant_term();
            }
        return g;
    }
    // Measured case at u = v = s3; entries reduce to +/- <s_mu s_nu>_0.
    const auto s3 = sigma_vector(3);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const auto refl_mu = improper_reflector(mu);
            const auto refl_nu = improper_reflector(nu);
            const auto s_nu =
                nu == 0 ? Multivector<double>::scalar(Algebra::sigma(), 1.0) : sigma_vector(nu);
            const auto prod = s3 * refl_mu * refl_nu * s_nu * s3 * s_nu;
            g[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = prod.scalar_part();
        }
    return g;
}

}  // namespace spinga
