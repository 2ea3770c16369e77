#include "spinga/pauli_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace spinga::oracle {

namespace {
constexpr cplx kIm{0.0, 1.0};
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

Mat2 Mat2::operator+(const Mat2& o) const {
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.m[i] = m[i] + o.m[i];
    return out;
}

Mat2 Mat2::operator-(const Mat2& o) const {
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.m[i] = m[i] - o.m[i];
    return out;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.at(r, c) = at(r, 0) * o.at(0, c) + at(r, 1) * o.at(1, c);
    return out;
}

Mat2 Mat2::scaled(cplx s) const {
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.m[i] = m[i] * s;
    return out;
}

Mat2 Mat2::adjoint() const {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.at(r, c) = std::conj(at(c, r));
    return out;
}

double Mat2::max_abs_diff(const Mat2& o) const {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
    return d;
}

Mat2 identity2() {
    Mat2 out;
    out.at(0, 0) = 1.0;
    out.at(1, 1) = 1.0;
    return out;
}

Mat2 pauli(int j) {
    Mat2 out;
    switch (j) {
        case 1:
            out.at(0, 1) = 1.0;
            out.at(1, 0) = 1.0;
            break;
        case 2:
            out.at(0, 1) = -kIm;
            out.at(1, 0) = kIm;
            break;
        case 3:
            out.at(0, 0) = 1.0;
            out.at(1, 1) = -1.0;
            break;
        default:
            throw std::out_of_range("pauli index must be 1..3");
    }
    return out;
}

Mat2 direction_matrix(const Vec3& u) {
    Mat2 out;
    out.at(0, 0) = u[2];
    out.at(0, 1) = cplx{u[0], -u[1]};
    out.at(1, 0) = cplx{u[0], u[1]};
    out.at(1, 1) = -u[2];
    return out;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int ar = 0; ar < 2; ++ar)
        for (int ac = 0; ac < 2; ++ac)
            for (int br = 0; br < 2; ++br)
                for (int bc = 0; bc < 2; ++bc)
                    out.at(2 * ar + br, 2 * ac + bc) = a.at(ar, ac) * b.at(br, bc);
    return out;
}

const char* bell_label(BellName name) {
    switch (name) {
        case BellName::psi_minus: return "psi-";
        case BellName::psi_plus: return "psi+";
        case BellName::phi_minus: return "phi-";
        case BellName::phi_plus: return "phi+";
    }
    return "?";
}

Vec4c standard_bell(BellName name) {
    switch (name) {
        case BellName::psi_minus: return {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
        case BellName::psi_plus: return {0.0, kInvSqrt2, kInvSqrt2, 0.0};
        case BellName::phi_minus: return {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
        case BellName::phi_plus: return {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    }
    throw std::invalid_argument("unknown Bell state");
}

namespace {

double expectation4(const Vec4c& psi, const Mat4& op) {
    cplx total = 0.0;
    for (int r = 0; r < 4; ++r) {
        cplx row = 0.0;
        for (int c = 0; c < 4; ++c) row += op.at(r, c) * psi[static_cast<std::size_t>(c)];
        total += std::conj(psi[static_cast<std::size_t>(r)]) * row;
    }
    return total.real();
}

}  // namespace

double oracle_bipartite(BellName state, const Vec3& u, const Vec3& v) {
    return expectation4(standard_bell(state), kron(direction_matrix(u), direction_matrix(v)));
}

double oracle_partial(BellName state, const Vec3& u, int which) {
    if (which != 1 && which != 2) throw std::out_of_range("which must be 1 or 2");
    const Mat4 op = which == 1 ? kron(direction_matrix(u), identity2())
                               : kron(identity2(), direction_matrix(u));
    return expectation4(standard_bell(state), op);
}

Vec2c state_from_axis(const Vec3& axis) {
    const double theta = std::atan2(std::hypot(axis[0], axis[1]), axis[2]);
    const double phi = (std::hypot(axis[0], axis[1]) < 1e-15) ? 0.0 : std::atan2(axis[1], axis[0]);
    return {std::cos(theta / 2.0),
            std::exp(kIm * phi) * std::sin(theta / 2.0)};
}

std::pair<double, double> born_probability(const Vec2c& state, const Vec3& detector) {
    // p+ = <state| (1 + u.sigma)/2 |state>
    const Mat2 proj = (identity2() + direction_matrix(detector)).scaled(0.5);
    cplx p_plus = 0.0;
    for (int r = 0; r < 2; ++r) {
        cplx row = proj.at(r, 0) * state[0] + proj.at(r, 1) * state[1];
        p_plus += std::conj(state[static_cast<std::size_t>(r)]) * row;
    }
    return {p_plus.real(), 1.0 - p_plus.real()};
}

std::pair<double, double> born_probability(const Vec3& spin_axis, const Vec3& detector) {
    return born_probability(state_from_axis(spin_axis), detector);
}

Mat2 sigma_to_matrix(const Multivector<double>& a) {
    if (a.algebra() != Algebra::sigma())
        throw std::invalid_argument("sigma_to_matrix expects a Cl(3,0) multivector");
    using namespace sigma_blades;
    Mat2 out = identity2().scaled(a[k1]);
    out = out + pauli(1).scaled(a[kS1]);
    out = out + pauli(2).scaled(a[kS2]);
    out = out + pauli(3).scaled(a[kS3]);
    // Bivectors are pseudoscalar duals: s12 = I s3, s23 = I s1, s13 = -I s2.
    out = out + pauli(3).scaled(kIm * a[kS12]);
    out = out + pauli(1).scaled(kIm * a[kS23]);
    out = out + pauli(2).scaled(-kIm * a[kS13]);
    out = out + identity2().scaled(kIm * a[kI]);
    return out;
}

Mat2 sigma_to_matrix(const Multivector<TrigPoly>& a,
                     const std::map<std::string, double>& assignment) {
    return sigma_to_matrix(eval(a, assignment));
}

BellName bell_for_mu(int mu) {
    switch (mu) {
        case 0: return BellName::psi_minus;
        case 1: return BellName::phi_minus;
        case 2: return BellName::phi_plus;
        case 3: return BellName::psi_plus;
        default: throw std::out_of_range("Bell index must be 0..3");
    }
}

}  // namespace spinga::oracle
