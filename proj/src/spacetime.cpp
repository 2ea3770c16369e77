#include "spinga/spacetime.hpp"

#include <cmath>
#include <stdexcept>

namespace spinga {

namespace {

void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("spacetime frame invariant violated: ") + what);
}

bool is_scalar_value(const Multivector<double>& a, double value, double tol = kTol) {
    if (std::abs(a.scalar_part() - value) > tol) return false;
    for (unsigned i = 1; i < a.size(); ++i)
        if (std::abs(a[i]) > tol) return false;
    return true;
}

}  // namespace

SpacetimeFrame build_spacetime_frame() {
    const Algebra& alg = Algebra::spacetime();
    SpacetimeFrame f{
        {Multivector<double>::blade(alg, 1u << 0, 1.0), Multivector<double>::blade(alg, 1u << 1, 1.0),
         Multivector<double>::blade(alg, 1u << 2, 1.0), Multivector<double>::blade(alg, 1u << 3, 1.0),
         Multivector<double>::blade(alg, 1u << 4, 1.0)},
        {Multivector<double>(alg), Multivector<double>(alg), Multivector<double>(alg),
         Multivector<double>(alg), Multivector<double>(alg)},
        Multivector<double>(alg),
        {Multivector<double>(alg), Multivector<double>(alg), Multivector<double>(alg)},
        {Multivector<double>(alg), Multivector<double>(alg), Multivector<double>(alg)}};

    for (int tau = 0; tau < 5; ++tau)
        f.reciprocal[static_cast<std::size_t>(tau)] =
            f.e[static_cast<std::size_t>(tau)].scaled(alg.metric_sign(tau));

    f.pseudoscalar = f.e[0] * f.e[4] * f.e[1] * f.e[2] * f.e[3];

    for (int j = 1; j <= 3; ++j) {
        f.x[static_cast<std::size_t>(j - 1)] = f.e[0] * f.e[static_cast<std::size_t>(j)];
        f.sigma[static_cast<std::size_t>(j - 1)] =
            f.e[0] * f.e[static_cast<std::size_t>(j)] * f.e[4];
    }

    // Metric, subspace squares, centrality, reciprocal identity.
    for (int tau = 0; tau < 5; ++tau) {
        const auto& g = f.e[static_cast<std::size_t>(tau)];
        check(is_scalar_value(g * g, alg.metric_sign(tau)), "generator square");
        for (int nu = 0; nu < 5; ++nu) {
            const auto prod = f.reciprocal[static_cast<std::size_t>(tau)] *
                              f.e[static_cast<std::size_t>(nu)];
            check(std::abs(prod.scalar_part() - (tau == nu ? 1.0 : 0.0)) <= kTol,
                  "reciprocal frame");
        }
    }
    for (int j = 0; j < 3; ++j) {
        check(is_scalar_value(f.sigma[static_cast<std::size_t>(j)] *
                                  f.sigma[static_cast<std::size_t>(j)],
                              1.0),
              "axial vector square");
        check(is_scalar_value(f.x[static_cast<std::size_t>(j)] * f.x[static_cast<std::size_t>(j)],
                              1.0),
              "polar vector square");
    }
    check(is_scalar_value(f.pseudoscalar * f.pseudoscalar, -1.0), "pseudoscalar square");
    for (unsigned b = 0; b < alg.size(); ++b) {
        const auto blade = Multivector<double>::blade(alg, b, 1.0);
        check((f.pseudoscalar * blade - blade * f.pseudoscalar).is_zero(), "centrality");
    }
    return f;
}

Multivector<double> embed_sigma_blade(const SpacetimeFrame& f, unsigned mask) {
    if (mask >= 8) throw std::out_of_range("sigma blade mask must be < 8");
    auto out = Multivector<double>::scalar(Algebra::spacetime(), 1.0);
    for (int j = 0; j < 3; ++j)
        if (mask & (1u << j)) out = out * f.sigma[static_cast<std::size_t>(j)];
    return out;
}

Multivector<double> parity_conjugate(const SpacetimeFrame& f, const Multivector<double>& a) {
    return f.e[0] * a * f.e[0];
}

SpinorSplit spacetime_split(const SpacetimeFrame& f, const Multivector<double>& psi) {
    const auto one = Multivector<double>::scalar(Algebra::spacetime(), 1.0);
    const auto p_plus = (one + f.e[0]).scaled(0.5);
    const auto p_minus = (one - f.e[0]).scaled(0.5);
    return SpinorSplit{p_plus * psi, p_minus * psi};
}

PauliSplit pauli_split(const Multivector<double>& phi_p) {
    if (phi_p.algebra() != Algebra::sigma())
        throw std::invalid_argument("pauli_split expects a Cl(3,0) multivector");
    for (unsigned i = 0; i < phi_p.size(); ++i)
        if ((Algebra::grade(i) % 2) != 0 && std::abs(phi_p[i]) > kTol)
            throw std::invalid_argument("pauli_split requires an even multivector");
    const auto one = Multivector<double>::scalar(Algebra::sigma(), 1.0);
    const auto s3 = sigma_vector(3);
    const auto p_plus = (one + s3).scaled(0.5);
    const auto p_minus = (one - s3).scaled(0.5);
    // Even spinor phi = a0 + a1 I s1 + a2 I s2 + a3 I s3 corresponds to the
    // column (a0 + i a3, -a2 + i a1); the amplitudes are the row moduli.
    using namespace sigma_blades;
    const double a0 = phi_p[k1];
    const double a1 = phi_p[kS23];
    const double a2 = -phi_p[kS13];
    const double a3 = phi_p[kS12];
    return PauliSplit{p_plus * phi_p, p_minus * phi_p, std::hypot(a0, a3), std::hypot(a1, a2)};
}

Multivector<double> pauli_rotor_form(double rho, double theta) {
    if (rho < 0.0) throw std::invalid_argument("rho must be nonnegative");
    const auto one = Multivector<double>::scalar(Algebra::sigma(), 1.0);
    const auto i_s2 = sigma_pseudoscalar() * sigma_vector(2);
    return one.scaled(rho * std::cos(theta / 2.0)) - i_s2.scaled(rho * std::sin(theta / 2.0));
}

}  // namespace spinga
