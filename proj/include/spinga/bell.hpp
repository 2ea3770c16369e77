#pragma once

#include <array>

#include "spinga/spin.hpp"

namespace spinga {

/// How the superposed pair realizations pick their base spins.
/// y:              full-spin pairs as listed row by row in the orthogonal-state table;
///                 base spin +S for mu = 0,1 and -S for mu = 2,3.
/// y_prime:        measured (Stern-Gerlach) form with the same base signs.
/// y_double_prime: mu = 1,2 only; the two superposed configurations use
///                 opposite base signs (two-up superposed with two-down),
///                 which makes every partial expectation vanish.
enum class BellVariant { y, y_prime, y_double_prime };

/// Maximally entangled pair: two superposed 2-spin configurations, each an
/// in-phase pair whose partners are mutual improper images (inversion for
/// mu = 0, the s_mu plane reflection for mu = 1..3) and therefore have
/// opposite handedness.
struct BellPair {
    int mu;
    BellVariant variant;
    PhaseVar phase;                     // the one phase variable shared by all four spins
    std::array<PhasedSpin, 2> pair_a;   // (S, I s_mu S I s_mu)
    std::array<PhasedSpin, 2> pair_b;   // the swapped configuration
    int base_sign_a;                    // sign of the base spin in configuration A
    int base_sign_b;                    // and in configuration B
};

BellPair bell_state(int mu, BellVariant variant = BellVariant::y);

/// Improper image I s_mu w I s_mu of a direction.
Vec3 improper_image(int mu, const Vec3& w);

/// Total spin of the pair and its squared moduli.
struct TotalSpin {
    Multivector<TrigPoly> vector_sum;  // S_(1) + S_(2) of configuration A
    double square_expected;            // phase expectation of (S_tot)^2, config-averaged
    double mean_square;                // (<S_tot>)^2, the observed squared sum
};
TotalSpin total_spin(const BellPair& b);

/// Phase-expected 2 S_(1).S_(2): -3/2 for the singlet, +1/2 for each triplet.
double intrinsic_correlation(const BellPair& b);

/// Normalized bipartite expectation for detectors u and v, computed as the
/// average over the two superposed configurations of the scalar part of the
/// realized spin product. Equals -u.v for mu = 0 and u.v - 2 u^mu v^mu for
/// mu = 1..3.
double bipartite_expectation(const BellPair& b, const Vec3& u, const Vec3& v);

/// The same number along the bivector route: the scalar part of
/// (s3 u)^dagger s3 (I s_mu v I s_mu), where both the scalar and bivector
/// parts of the spin projections contribute.
double bipartite_expectation_bivector(const BellPair& b, const Vec3& u, const Vec3& v);

/// The same number from the algebraic sum-of-products form of the state.
double bipartite_expectation_alt(const BellPair& b, const Vec3& u, const Vec3& v);

/// Closed form of the bipartite expectation.
double bipartite_closed_form(int mu, const Vec3& u, const Vec3& v);

/// One-sided expectation value for particle 1 or 2 with the given detector,
/// averaged over the superposition. Zero for mu = 0,3; +/-(direction
/// component along s3) for mu = 1,2 with the y/y_prime sign choice; zero for
/// every state with the y_double_prime choice.
double partial_expectation(const BellPair& b, const Vec3& direction, int which);

/// Separable (non-entangled) pair as a cross-superposition of Bell pieces.
enum class SeparableKind { up_down, down_up, up_up, down_down };

struct SeparableExpectation {
    double bipartite;
    double partial_1;
    double partial_2;
};

/// Bipartite value -u^3 v^3 for the antiparallel kinds and +u^3 v^3 for the
/// parallel kinds; the partials factorize the bipartite value exactly.
SeparableExpectation separable_expectation(SeparableKind kind, const Vec3& u, const Vec3& v);

/// Gram matrix <Y_mu^dagger Y_nu>_0 of the four states in the one-sided
/// (spinor) representation, with full spins (phase-expected) or with
/// Stern-Gerlach measured spins at u = v = s3. Off-diagonal entries vanish;
/// the measured case reduces to the orthogonality of {1, s_j}.
using Gram4 = std::array<std::array<double, 4>, 4>;
Gram4 spinor_bell_gram(bool full);

}  // namespace spinga
