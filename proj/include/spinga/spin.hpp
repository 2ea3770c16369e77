#pragma once

#include <array>

#include "spinga/algebra.hpp"
#include "spinga/trigpoly.hpp"

namespace spinga {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 normalized(const Vec3& a);

/// Grade-1 Cl(3,0) multivector with the given components.
Multivector<double> to_sigma(const Vec3& v);

/// Components of a grade-1 Cl(3,0) multivector.
Vec3 from_sigma(const Multivector<double>& a);

enum class Handedness { left, right };
enum class SpinDirection { up, down };

/// A spin-1/2 state: half the sum of three orthonormal constituent vectors,
/// two of which rotate with an unobservable gauge phase around the third.
/// The phase-insensitive constituent fixes the spin axis; the orientation of
/// the triple (signs as written) fixes the handedness.
///
/// The squared modulus mv()*reverse(mv()) is the constant 3/4 (units hbar^2)
/// with no phase averaging, while the phase expectation of mv() is half the
/// axis — the observed spin vector.
struct PhasedSpin {
    std::array<Multivector<TrigPoly>, 3> parts;  // unit constituents; spin = (sum)/2
    PhaseVar phase;
    int phase_sign;  // sign with which the gauge phase enters (+1 up-type, -1 down-type)
    Vec3 axis;       // phase-insensitive unit direction
    Handedness hand;

    Multivector<TrigPoly> mv() const;

    /// mv() * reverse(mv()) as a trig polynomial; constant 3/4 for any spin.
    TrigPoly full_square() const;
};

/// Basis spin along +/- s3 with the given gauge phase. The down spin is the
/// s2-reflection of the up spin, which reverses the sign of the phase.
PhasedSpin make_spin(SpinDirection dir, const PhaseVar& phase);

/// Frame spin S_j (j = 1..3): axis s_j, in-plane pair (s_{j+1}, s_{j+2})
/// rotating about it (indices cyclic).
PhasedSpin make_spin(int frame_index, const PhaseVar& phase);

/// Observed spin vector: phase expectation applied coefficient-wise,
/// yielding half the axis as a real grade-1 multivector.
Multivector<double> spin_expectation(const PhasedSpin& s);

/// Spin with all constituents negated (an improper image; handedness flips).
PhasedSpin negated(const PhasedSpin& s);

/// Apply an arbitrary rotor two-sidedly to every constituent.
PhasedSpin apply_rotor(const PhasedSpin& s, const Versor& r);

/// Rotate the gauge phase label by delta (a rotation about the spin axis).
PhasedSpin shift_phase(const PhasedSpin& s, double delta);

/// Polar/azimuth decomposition of a unit direction relative to s3. For
/// u parallel to +/-s3 the rotation-plane normal is undefined; by convention
/// u2 = s2 (and u_perp = s1), the continuous limit of the generic case.
struct PolarFrame {
    double theta;  // polar angle from s3
    double phi;    // azimuth from s1
    Vec3 u_perp;   // in-plane unit vector at azimuth phi
    Vec3 u2;       // rotation-plane normal, azimuth phi + pi/2
};
PolarFrame polar_frame(const Vec3& u);

/// Rotor about u2 by the polar angle (takes s3 to u when the azimuth is 0).
Versor polar_rotor(const Vec3& u);

/// Rotor about s3 by the azimuth of u.
Versor azimuth_rotor(const Vec3& u);

/// Combined rotation R = R_theta * R_phi; takes the s3-spin to axis u.
Versor combined_rotor(const Vec3& u);

/// Two-sided transport of a spin by the combined rotor targeting u.
/// Handedness and the full square are preserved.
PhasedSpin rotate_spin(const PhasedSpin& s, const Vec3& target);

/// Two-sided improper image I*s_mu S I*s_mu; mu = 0 is the inversion.
/// Handedness flips; the inversion negates the spin outright.
PhasedSpin improper_map(const PhasedSpin& s, int mu);

/// Halfway-vector (reduced spinor) pair for a direction u relative to a
/// reference axis: u_plus = R_theta * ref and u_minus = reverse(R_(pi-theta))
/// * (-ref), both one-sided rotor products. They are orthonormal and
/// reconstruct u as u_plus cos(theta/2) + u_minus sin(theta/2).
struct ReducedSpinorPair {
    Multivector<double> u_plus;
    Multivector<double> u_minus;
    Versor spinor_up;    // R_theta
    Versor spinor_down;  // -reverse(R_(pi-theta))
};
ReducedSpinorPair reduced_spinors(const Vec3& u);
ReducedSpinorPair reduced_spinors(const Vec3& u, const Vec3& reference);

/// Stern-Gerlach measurement along a unit detector direction.
struct MeasurementRecord {
    double p_coincide;
    double p_anti;
    double correlation;    // scalar part of axis * detector, in [-1, 1]
    double amp_coincide;   // cos(theta/2)
    double amp_anti;       // sin(theta/2)
    PhasedSpin outcome;    // axis = detector, fresh phase (irreversibility)
};
MeasurementRecord sg_measure(const PhasedSpin& s, const Vec3& detector);

/// One-sided (spinor) composition of a spin at u from the two basis spins:
/// R_theta S_up cos(theta/2) + reverse(R_(pi-theta)) S_down sin(theta/2).
/// The individual terms mix grades; their sum is the grade-1 spin and equals
/// the two-sided polar-rotor transport held in `spin`.
struct SpinorComposition {
    Multivector<TrigPoly> up_term;
    Multivector<TrigPoly> down_term;
    PhasedSpin spin;

    Multivector<TrigPoly> total() const { return up_term + down_term; }
};
SpinorComposition spinor_compose(const Vec3& u, const PhaseVar& phase);

/// Scalar part of (R_theta S I*u2)^dagger (R_theta S): zero, the
/// orthogonality relation of the full spinor representation.
double spinor_gram(const Vec3& u);

/// Spinor-form Stern-Gerlach transformation of a spin with axis u measured
/// along the reference axis: the one-sided product reverse(R_theta) * S_u
/// with a fresh phase, decomposed into coincidence and anti-coincidence
/// components with amplitudes cos(theta/2) and sin(theta/2).
struct SgSpinorTransform {
    Multivector<TrigPoly> transformed;     // reverse(R_theta) * S_u(fresh)
    Multivector<TrigPoly> up_component;    // S_up(fresh) cos(theta/2)
    Multivector<TrigPoly> down_component;  // I*u2 * (u2 S_up(fresh) u2) sin(theta/2)
    Multivector<double> vector_form;       // reverse(R_theta) * u, the spin-vector-only form
    PhaseVar fresh;
};
SgSpinorTransform sg_spinor_transform(const PhasedSpin& s, const Vec3& u);

}  // namespace spinga
