#include "spinga/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinga {

namespace {

constexpr double kUnitTol = 1e-9;

void require_unit(const Vec3& v, const char* what) {
    if (std::abs(norm(v) - 1.0) > kUnitTol)
        throw std::invalid_argument(std::string(what) + " must be a unit vector");
}

Handedness triple_hand(const std::array<Multivector<TrigPoly>, 3>& parts) {
    const auto wedge = outer(outer(parts[0], parts[1]), parts[2]);
    const TrigPoly& c = wedge[wedge.algebra().pseudoscalar_mask()];
    if (!c.is_constant(1e-9) || std::abs(c.constant_term()) < 0.5)
        throw std::logic_error("degenerate constituent triple");
    return c.constant_term() > 0.0 ? Handedness::right : Handedness::left;
}

PhasedSpin assemble(std::array<Multivector<TrigPoly>, 3> parts, PhaseVar phase, int phase_sign) {
    PhasedSpin s{std::move(parts), std::move(phase), phase_sign, Vec3{}, Handedness::right};
    s.axis = from_sigma(expect_all(s.mv()).scaled(2.0));
    s.hand = triple_hand(s.parts);
    return s;
}

Multivector<TrigPoly> phased_vector(const TrigPoly& c1, const TrigPoly& c2, const TrigPoly& c3) {
    auto v = Multivector<TrigPoly>(Algebra::sigma());
    v[sigma_blades::kS1] = c1;
    v[sigma_blades::kS2] = c2;
    v[sigma_blades::kS3] = c3;
    return v;
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    if (n < kUnitTol) throw std::invalid_argument("cannot normalize a near-zero vector");
    return {a[0] / n, a[1] / n, a[2] / n};
}

Multivector<double> to_sigma(const Vec3& v) {
    auto m = Multivector<double>(Algebra::sigma());
    m[sigma_blades::kS1] = v[0];
    m[sigma_blades::kS2] = v[1];
    m[sigma_blades::kS3] = v[2];
    return m;
}

Vec3 from_sigma(const Multivector<double>& a) {
    return {a[sigma_blades::kS1], a[sigma_blades::kS2], a[sigma_blades::kS3]};
}

Multivector<TrigPoly> PhasedSpin::mv() const {
    return (parts[0] + parts[1] + parts[2]).scaled(0.5);
}

TrigPoly PhasedSpin::full_square() const {
    const auto m = mv();
    return (m * m.reversed()).scalar_part();
}

PhasedSpin make_spin(SpinDirection dir, const PhaseVar& phase) {
    const TrigPoly zero;
    const TrigPoly one(1.0);
    const TrigPoly c = TrigPoly::cosine(phase);
    const TrigPoly s = TrigPoly::sine(phase);
    if (dir == SpinDirection::up) {
        // (1/2)(s3 + (s1 + s2)_phi)
        return assemble({phased_vector(zero, zero, one),
                         phased_vector(c, s, zero),
                         phased_vector(-s, c, zero)},
                        phase, +1);
    }
    // s2-reflection of the up spin: (1/2)(-s3 + (-s1 + s2)_(-phi))
    return assemble({phased_vector(zero, zero, -one),
                     phased_vector(-c, s, zero),
                     phased_vector(s, c, zero)},
                    phase, -1);
}

PhasedSpin make_spin(int frame_index, const PhaseVar& phase) {
    if (frame_index < 1 || frame_index > 3)
        throw std::out_of_range("frame index must be 1..3");
    const int j = frame_index - 1;
    const int j1 = (j + 1) % 3;
    const int j2 = (j + 2) % 3;
    const TrigPoly c = TrigPoly::cosine(phase);
    const TrigPoly s = TrigPoly::sine(phase);
    std::array<TrigPoly, 3> axis_c, first_c, second_c;
    axis_c[static_cast<std::size_t>(j)] = TrigPoly(1.0);
    first_c[static_cast<std::size_t>(j1)] = c;
    first_c[static_cast<std::size_t>(j2)] = s;
    second_c[static_cast<std::size_t>(j1)] = -s;
    second_c[static_cast<std::size_t>(j2)] = c;
    return assemble({phased_vector(axis_c[0], axis_c[1], axis_c[2]),
                     phased_vector(first_c[0], first_c[1], first_c[2]),
                     phased_vector(second_c[0], second_c[1], second_c[2])},
                    phase, +1);
}

Multivector<double> spin_expectation(const PhasedSpin& s) { return expect_all(s.mv()); }

PhasedSpin negated(const PhasedSpin& s) {
    return assemble({-s.parts[0], -s.parts[1], -s.parts[2]}, s.phase, s.phase_sign);
}

PhasedSpin apply_rotor(const PhasedSpin& s, const Versor& r) {
    return assemble({sandwich(r, s.parts[0]), sandwich(r, s.parts[1]), sandwich(r, s.parts[2])},
                    s.phase, s.phase_sign);
}

PhasedSpin shift_phase(const PhasedSpin& s, double delta) {
    return apply_rotor(s, rotor(to_sigma(s.axis), delta));
}

PolarFrame polar_frame(const Vec3& u) {
    const double rho = std::hypot(u[0], u[1]);
    const double theta = std::atan2(rho, u[2]);
    const double phi = rho < 1e-12 ? 0.0 : std::atan2(u[1], u[0]);
    return PolarFrame{theta, phi,
                      Vec3{std::cos(phi), std::sin(phi), 0.0},
                      Vec3{-std::sin(phi), std::cos(phi), 0.0}};
}

Versor polar_rotor(const Vec3& u) {
    const PolarFrame f = polar_frame(u);
    return rotor(to_sigma(f.u2), f.theta);
}

Versor azimuth_rotor(const Vec3& u) {
    const PolarFrame f = polar_frame(u);
    return rotor(sigma_vector(3), f.phi);
}

Versor combined_rotor(const Vec3& u) { return polar_rotor(u) * azimuth_rotor(u); }

PhasedSpin rotate_spin(const PhasedSpin& s, const Vec3& target) {
    require_unit(target, "rotation target");
    return apply_rotor(s, combined_rotor(target));
}

PhasedSpin improper_map(const PhasedSpin& s, int mu) {
    const Versor refl = improper_reflector(mu);
    return assemble({sandwich(refl, s.parts[0], true), sandwich(refl, s.parts[1], true),
                     sandwich(refl, s.parts[2], true)},
                    s.phase, s.phase_sign);
}

ReducedSpinorPair reduced_spinors(const Vec3& u) { return reduced_spinors(u, Vec3{0.0, 0.0, 1.0}); }

ReducedSpinorPair reduced_spinors(const Vec3& u, const Vec3& reference) {
    require_unit(u, "direction");
    require_unit(reference, "reference");
    const double c = std::clamp(dot(reference, u), -1.0, 1.0);
    const double theta = std::acos(c);
    Vec3 n = cross(reference, u);
    if (norm(n) < 1e-12) {
        // Degenerate u parallel to the reference: take the convention normal
        // (s2 when the reference is s3).
        n = cross(reference, Vec3{1.0, 0.0, 0.0});
        if (norm(n) < 1e-12) n = cross(reference, Vec3{0.0, 1.0, 0.0});
    }
    n = normalized(n);
    const Versor r_theta = rotor(to_sigma(n), theta);
    const Versor r_rest = rotor(to_sigma(n), std::numbers::pi - theta);
    const Multivector<double> ref_mv = to_sigma(reference);
    return ReducedSpinorPair{r_theta * ref_mv,
                             r_rest.reversed() * (-ref_mv),
                             r_theta,
                             -r_rest.reversed()};
}

MeasurementRecord sg_measure(const PhasedSpin& s, const Vec3& detector) {
    require_unit(detector, "detector");
    const double c = std::clamp(dot(s.axis, detector), -1.0, 1.0);
    const double theta = std::acos(c);
    const double amp_c = std::cos(theta / 2.0);
    const double amp_a = std::sin(theta / 2.0);
    const double p_c = amp_c * amp_c;
    // Projection of the start spin onto the detector alignment.
    const double correlation = (to_sigma(s.axis) * to_sigma(detector)).scalar_part();
    return MeasurementRecord{p_c,
                             1.0 - p_c,
                             correlation,
                             amp_c,
                             amp_a,
                             rotate_spin(make_spin(SpinDirection::up, fresh_phase()), detector)};
}

SpinorComposition spinor_compose(const Vec3& u, const PhaseVar& phase) {
    require_unit(u, "direction");
    const PolarFrame f = polar_frame(u);
    const Versor r_theta = rotor(to_sigma(f.u2), f.theta);
    const Versor r_rest = rotor(to_sigma(f.u2), std::numbers::pi - f.theta);
    const PhasedSpin up = make_spin(SpinDirection::up, phase);
    // The opposite basis spin is the pi-rotation of the up spin about u2,
    // i.e. its u2-reflection; at zero azimuth this is the s2-reflected down
    // spin of the definition.
    const auto u2_tp = to_ring<TrigPoly>(to_sigma(f.u2));
    const auto down_mv = u2_tp * up.mv() * u2_tp;
    const double half_c = std::cos(f.theta / 2.0);
    const double half_s = std::sin(f.theta / 2.0);
    return SpinorComposition{
        (to_ring<TrigPoly>(r_theta) * up.mv()).scaled(half_c),
        (to_ring<TrigPoly>(r_rest.reversed()) * down_mv).scaled(half_s),
        apply_rotor(up, r_theta)};
}

double spinor_gram(const Vec3& u) {
    require_unit(u, "direction");
    const PolarFrame f = polar_frame(u);
    const auto r_theta = to_ring<TrigPoly>(polar_rotor(u));
    const auto i_u2 = to_ring<TrigPoly>(sigma_pseudoscalar() * to_sigma(f.u2));
    const auto spin = make_spin(SpinDirection::up, fresh_phase()).mv();
    const auto left = r_theta * spin * i_u2;
    const auto right = r_theta * spin;
    return (left.reversed() * right).scalar_part().expect_all().constant_term();
}

SgSpinorTransform sg_spinor_transform(const PhasedSpin& s, const Vec3& u) {
    require_unit(u, "direction");
    if (std::abs(dot(s.axis, u) - 1.0) > kUnitTol)
        throw std::invalid_argument("incoming spin axis must match u");
    const PolarFrame f = polar_frame(u);
    const Versor r_theta = rotor(to_sigma(f.u2), f.theta);
    const PhaseVar fresh = fresh_phase();
    const PhasedSpin up_fresh = make_spin(SpinDirection::up, fresh);
    const PhasedSpin spin_u = apply_rotor(up_fresh, r_theta);
    const auto u2_tp = to_ring<TrigPoly>(to_sigma(f.u2));
    const auto i_u2_tp = to_ring<TrigPoly>(sigma_pseudoscalar() * to_sigma(f.u2));
    const double half_c = std::cos(f.theta / 2.0);
    const double half_s = std::sin(f.theta / 2.0);
    return SgSpinorTransform{
        to_ring<TrigPoly>(r_theta.reversed()) * spin_u.mv(),
        up_fresh.mv().scaled(half_c),
        (i_u2_tp * (u2_tp * up_fresh.mv() * u2_tp)).scaled(half_s),
        r_theta.reversed() * to_sigma(u),
        fresh};
}

}  // namespace spinga
