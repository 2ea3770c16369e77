#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "spinga/algebra.hpp"
#include "spinga/trigpoly.hpp"

namespace spinga::oracle {

// Standard-QM reference implementation used for differential testing.
// Deliberately built on plain complex arithmetic, sharing no code with the
// multivector engine it checks.

using cplx = std::complex<double>;

struct Mat2 {
    std::array<cplx, 4> m{};  // row-major

    cplx& at(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
    const cplx& at(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 scaled(cplx s) const;
    Mat2 adjoint() const;
    cplx trace() const { return m[0] + m[3]; }
    double max_abs_diff(const Mat2& o) const;
};

struct Mat4 {
    std::array<cplx, 16> m{};

    cplx& at(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    const cplx& at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }
};

using Vec2c = std::array<cplx, 2>;
using Vec4c = std::array<cplx, 4>;
using Vec3 = std::array<double, 3>;

Mat2 identity2();
Mat2 pauli(int j);  // j = 1..3
Mat2 direction_matrix(const Vec3& u);  // u . sigma_hat
Mat4 kron(const Mat2& a, const Mat2& b);

enum class BellName { psi_minus, psi_plus, phi_minus, phi_plus };

const char* bell_label(BellName name);

/// Standard unit Bell vector in the sigma-3 product basis |uu>,|ud>,|du>,|dd>.
Vec4c standard_bell(BellName name);

/// <psi| (u.sigma) (x) (v.sigma) |psi>.
double oracle_bipartite(BellName state, const Vec3& u, const Vec3& v);

/// One-sided expectation <psi| (u.sigma) (x) 1 |psi> (which = 1) or
/// <psi| 1 (x) (u.sigma) |psi> (which = 2).
double oracle_partial(BellName state, const Vec3& u, int which);

/// Spin-1/2 state with spin vector along the given axis, as a C^2 column.
Vec2c state_from_axis(const Vec3& axis);

/// Born probabilities (p+, p-) of finding the state aligned/anti-aligned
/// with the detector direction.
std::pair<double, double> born_probability(const Vec2c& state, const Vec3& detector);
std::pair<double, double> born_probability(const Vec3& spin_axis, const Vec3& detector);

/// Linear isomorphism from the orientation algebra onto 2x2 complex
/// matrices: 1 -> id, s_j -> sigma_j, I -> i*id (so s_jk -> i eps_jkl sigma_l).
Mat2 sigma_to_matrix(const Multivector<double>& a);

/// Same map after numerically assigning every phase variable; throws on an
/// unassigned variable.
Mat2 sigma_to_matrix(const Multivector<TrigPoly>& a,
                     const std::map<std::string, double>& assignment);

/// Bell index correspondence pinned by the differential test:
/// mu = 0,1,2,3 -> psi-, phi-, phi+, psi+.
BellName bell_for_mu(int mu);

}  // namespace spinga::oracle
