#pragma once

#include <array>

#include "spinga/algebra.hpp"

namespace spinga {

/// Frame data of the Cl(2,3) spacetime-reflection algebra: the five
/// generators e0..e3, e5 (metric +,-,-,-,+), the pseudoscalar
/// I = e0 e5 e1 e2 e3, the reciprocal frame, and the two embedded 3D
/// subspaces: boost (polar) vectors x_j = e0 e_j and spin (axial) vectors
/// s_j = e0 e_j e5. All listed identities are checked at construction.
struct SpacetimeFrame {
    std::array<Multivector<double>, 5> e;           // e0, e1, e2, e3, e5
    std::array<Multivector<double>, 5> reciprocal;  // e^tau = zeta_tau_tau e_tau
    Multivector<double> pseudoscalar;               // I = e0 e5 e1 e2 e3
    std::array<Multivector<double>, 3> x;           // x_j = e0 e_j
    std::array<Multivector<double>, 3> sigma;       // s_j = e0 e_j e5
};

SpacetimeFrame build_spacetime_frame();

/// The Cl(2,3) multivector realizing a Cl(3,0) basis blade: ascending
/// product of the embedded axial generators named by the mask bits.
Multivector<double> embed_sigma_blade(const SpacetimeFrame& f, unsigned mask);

/// e0 a e0. Axial vectors are fixed (parity-even), polar vectors negate.
Multivector<double> parity_conjugate(const SpacetimeFrame& f, const Multivector<double>& a);

/// Spacetime split by the complementary idempotents (1 +/- e0)/2.
struct SpinorSplit {
    Multivector<double> phi;  // (1 + e0)/2 psi
    Multivector<double> chi;  // (1 - e0)/2 psi
};
SpinorSplit spacetime_split(const SpacetimeFrame& f, const Multivector<double>& psi);

/// Split of an even Cl(3,0) element by the projectors (1 +/- s3)/2, with the
/// spin up/down probability amplitudes read off the even-spinor
/// coefficients. Rejects inputs with odd-grade content.
struct PauliSplit {
    Multivector<double> up_part;    // (1 + s3)/2 phi
    Multivector<double> down_part;  // (1 - s3)/2 phi
    double amp_up;
    double amp_down;
};
PauliSplit pauli_split(const Multivector<double>& phi_p);

/// rho exp(-I s2 theta/2) = rho (cos(theta/2) - I s2 sin(theta/2)), the
/// spin-position-decoupled Pauli spinor; a unit rotor when rho = 1.
Multivector<double> pauli_rotor_form(double rho, double theta);

}  // namespace spinga
