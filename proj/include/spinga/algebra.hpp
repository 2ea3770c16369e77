#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinga {

/// Default absolute tolerance for floating comparisons throughout the library.
inline constexpr double kTol = 1e-12;

/// Descriptor of a real Clifford algebra Cl(p,q) with dim <= 5 generators.
///
/// Blades are encoded as bitmasks over generators (bit i set <=> generator i
/// present); the canonical blade multiplies generators in ascending index
/// order. The full 2^dim x 2^dim product sign table (reordering swaps times
/// metric contraction) is memoized at construction.
class Algebra {
public:
    int dim() const { return dim_; }
    std::size_t size() const { return size_; }
    int metric_sign(int generator) const { return metric_[static_cast<std::size_t>(generator)]; }
    const std::string& name() const { return name_; }

    int product_sign(unsigned a, unsigned b) const { return sign_[a * size_ + b]; }
    static constexpr unsigned product_blade(unsigned a, unsigned b) { return a ^ b; }
    static int grade(unsigned blade) { return std::popcount(blade); }

    /// Blade mask of the pseudoscalar (all generators).
    unsigned pseudoscalar_mask() const { return static_cast<unsigned>(size_ - 1); }

    /// Euclidean orientation space, Cl(3,0); generators s1, s2, s3.
    static const Algebra& sigma() {
        static const Algebra a("Cl(3,0)", {+1, +1, +1});
        return a;
    }

    /// Spacetime-reflection algebra Cl(2,3); generators e0, e1, e2, e3, e5
    /// with metric (+,-,-,-,+) in that order.
    static const Algebra& spacetime() {
        static const Algebra a("Cl(2,3)", {+1, -1, -1, -1, +1});
        return a;
    }

    bool operator==(const Algebra& other) const { return this == &other; }
    bool operator!=(const Algebra& other) const { return this != &other; }

private:
    Algebra(std::string name, std::vector<int> metric)
        : name_(std::move(name)), metric_(std::move(metric)) {
        dim_ = static_cast<int>(metric_.size());
        size_ = std::size_t{1} << dim_;
        sign_.resize(size_ * size_);
        for (unsigned a = 0; a < size_; ++a)
            for (unsigned b = 0; b < size_; ++b)
                sign_[a * size_ + b] = static_cast<std::int8_t>(compute_sign(a, b));
    }

    int compute_sign(unsigned a, unsigned b) const {
        // Transpositions needed to merge the two generator lists.
        int swaps = 0;
        for (unsigned rest = a >> 1; rest != 0; rest >>= 1)
            swaps += std::popcount(rest & b);
        int sign = (swaps & 1) ? -1 : 1;
        // Repeated generators contract through the metric.
        for (unsigned common = a & b; common != 0; common &= common - 1)
            sign *= metric_[static_cast<std::size_t>(std::countr_zero(common))];
        return sign;
    }

    std::string name_;
    std::vector<int> metric_;
    int dim_ = 0;
    std::size_t size_ = 0;
    std::vector<std::int8_t> sign_;
};

/// Scalar-ring requirements for Multivector coefficients: add, mul, negate,
/// zero, one, and a tolerance-based zero test. Specialized for double and
/// for TrigPoly (trigpoly.hpp).
template <class R>
struct ring_traits;

template <>
struct ring_traits<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_real(double v) { return v; }
    static bool is_zero(double v, double tol) { return std::abs(v) <= tol; }
    static bool is_structurally_zero(double v) { return v == 0.0; }
    static double max_abs(double v) { return std::abs(v); }
};

/// Dense multivector over a commutative scalar ring R, bound to one Algebra.
/// Immutable value semantics; every operation returns a fresh value.
template <class R>
class Multivector {
public:
    explicit Multivector(const Algebra& alg)
        : alg_(&alg), c_(alg.size(), ring_traits<R>::zero()) {}

    static Multivector scalar(const Algebra& alg, R value) {
        Multivector m(alg);
        m.c_[0] = std::move(value);
        return m;
    }

    static Multivector blade(const Algebra& alg, unsigned mask, R coeff) {
        if (mask >= alg.size()) throw std::out_of_range("blade mask out of range");
        Multivector m(alg);
        m.c_[mask] = std::move(coeff);
        return m;
    }

    const Algebra& algebra() const { return *alg_; }
    std::size_t size() const { return c_.size(); }

    const R& operator[](unsigned mask) const { return c_[mask]; }
    R& operator[](unsigned mask) { return c_[mask]; }

    Multivector operator+(const Multivector& o) const {
        require_same(o);
        Multivector out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
        return out;
    }

    Multivector operator-(const Multivector& o) const {
        require_same(o);
        Multivector out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
        return out;
    }

    Multivector operator-() const {
        Multivector out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
        return out;
    }

    Multivector& operator+=(const Multivector& o) {
        require_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }

    /// Geometric product. Blade x blade sign comes from the memoized table.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.require_same(b);
        Multivector out(*a.alg_);
        const std::size_t n = a.c_.size();
        for (unsigned i = 0; i < n; ++i) {
            if (ring_traits<R>::is_structurally_zero(a.c_[i])) continue;
            for (unsigned j = 0; j < n; ++j) {
                if (ring_traits<R>::is_structurally_zero(b.c_[j])) continue;
                R term = a.c_[i] * b.c_[j];
                if (a.alg_->product_sign(i, j) < 0) term = -term;
                out.c_[i ^ j] = out.c_[i ^ j] + term;
            }
        }
        return out;
    }

    Multivector scaled(double s) const {
        Multivector out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
        return out;
    }

    /// Grade-k projection; zeroes every blade whose popcount differs from k.
    Multivector grade_projected(int k) const {
        if (k < 0 || k > alg_->dim()) throw std::out_of_range("grade out of range");
        Multivector out(*alg_);
        for (unsigned i = 0; i < c_.size(); ++i)
            if (Algebra::grade(i) == k) out.c_[i] = c_[i];
        return out;
    }

    /// Reversion: grade-k part picks up (-1)^(k(k-1)/2).
    Multivector reversed() const {
        Multivector out(*alg_);
        for (unsigned i = 0; i < c_.size(); ++i) {
            const int k = Algebra::grade(i);
            out.c_[i] = ((k * (k - 1) / 2) & 1) ? -c_[i] : c_[i];
        }
        return out;
    }

    const R& scalar_part() const { return c_[0]; }

    bool is_zero(double tol = kTol) const {
        for (const R& v : c_)
            if (!ring_traits<R>::is_zero(v, tol)) return false;
        return true;
    }

    /// Largest coefficient magnitude, used for tolerance comparisons.
    double max_abs() const {
        double m = 0.0;
        for (const R& v : c_) m = std::max(m, ring_traits<R>::max_abs(v));
        return m;
    }

    void require_same(const Multivector& o) const {
        if (alg_ != o.alg_)
            throw std::invalid_argument("algebra mismatch: " + alg_->name() + " vs " +
                                        o.alg_->name());
    }

private:
    const Algebra* alg_;
    std::vector<R> c_;
};

/// Coefficient-wise ring conversion (e.g. double -> TrigPoly constants).
template <class To, class From>
Multivector<To> to_ring(const Multivector<From>& a) {
    Multivector<To> out(a.algebra());
    for (unsigned i = 0; i < a.size(); ++i) {
        // only real -> richer ring conversions are supported
        out[i] = ring_traits<To>::from_real(a[i]);
    }
    return out;
}

enum class BracketKind { commutator, anticommutator };

template <class R>
Multivector<R> bracket(const Multivector<R>& a, const Multivector<R>& b, BracketKind kind) {
    return kind == BracketKind::commutator ? a * b - b * a : a * b + b * a;
}

/// Outer (wedge) product: the grade-raising part of the geometric product.
template <class R>
Multivector<R> outer(const Multivector<R>& a, const Multivector<R>& b) {
    a.require_same(b);
    Multivector<R> out(a.algebra());
    const std::size_t n = a.size();
    for (unsigned i = 0; i < n; ++i) {
        if (ring_traits<R>::is_structurally_zero(a[i])) continue;
        for (unsigned j = 0; j < n; ++j) {
            if ((i & j) != 0) continue;
            if (ring_traits<R>::is_structurally_zero(b[j])) continue;
            R term = a[i] * b[j];
            if (a.algebra().product_sign(i, j) < 0) term = -term;
            out[i ^ j] = out[i ^ j] + term;
        }
    }
    return out;
}

/// A versor is a multivector known to be a product of invertible vectors;
/// its defining invariant is that v * reverse(v) is a nonzero scalar.
using Versor = Multivector<double>;

inline bool is_versor(const Versor& v, double tol = kTol) {
    const Versor n = v * v.reversed();
    if (std::abs(n.scalar_part()) <= tol) return false;
    for (unsigned i = 1; i < n.size(); ++i)
        if (std::abs(n[i]) > tol) return false;
    return true;
}

/// Inverse of a versor: reverse(v) / (v * reverse(v)).
inline Versor versor_inverse(const Versor& v) {
    const Versor n = v * v.reversed();
    const double norm = n.scalar_part();
    for (unsigned i = 1; i < n.size(); ++i)
        if (std::abs(n[i]) > kTol)
            throw std::domain_error("non-invertible: v * reverse(v) is not a scalar");
    if (std::abs(norm) <= kTol) throw std::domain_error("non-invertible: zero norm");
    return v.reversed().scaled(1.0 / norm);
}

namespace sigma_blades {
// Blade masks in Cl(3,0).
inline constexpr unsigned k1 = 0u;
inline constexpr unsigned kS1 = 1u;
inline constexpr unsigned kS2 = 2u;
inline constexpr unsigned kS3 = 4u;
inline constexpr unsigned kS12 = 3u;
inline constexpr unsigned kS13 = 5u;
inline constexpr unsigned kS23 = 6u;
inline constexpr unsigned kI = 7u;
}  // namespace sigma_blades

/// Unit pseudoscalar of the orientation algebra.
inline Multivector<double> sigma_pseudoscalar() {
    return Multivector<double>::blade(Algebra::sigma(), sigma_blades::kI, 1.0);
}

/// Frame vector s_j (j = 1..3) of the orientation algebra.
inline Multivector<double> sigma_vector(int j) {
    if (j < 1 || j > 3) throw std::out_of_range("frame index must be 1..3");
    return Multivector<double>::blade(Algebra::sigma(), 1u << (j - 1), 1.0);
}

/// Rotor about a unit axis: cos(angle/2) - I*axis*sin(angle/2).
/// The axis must be a grade-1 unit vector (tolerance 1e-9).
inline Versor rotor(const Multivector<double>& axis, double angle) {
    if (axis.algebra() != Algebra::sigma())
        throw std::invalid_argument("rotor axis must live in Cl(3,0)");
    double norm_sq = 0.0;
    for (unsigned i = 0; i < axis.size(); ++i) {
        if (Algebra::grade(i) != 1 && std::abs(axis[i]) > kTol)
            throw std::invalid_argument("rotor axis must be grade-1");
        if (Algebra::grade(i) == 1) norm_sq += axis[i] * axis[i];
    }
    if (std::abs(norm_sq - 1.0) > 1e-9)
        throw std::invalid_argument("rotor axis must be a unit vector");
    const double half = 0.5 * angle;
    return Multivector<double>::scalar(Algebra::sigma(), std::cos(half)) -
           (sigma_pseudoscalar() * axis).scaled(std::sin(half));
}

/// Two-sided versor action. Proper: v a reverse(v). Improper (reflector
/// I*s_mu): v a v, which preserves lengths and inverts handedness.
template <class R>
Multivector<R> sandwich(const Versor& v, const Multivector<R>& a, bool improper = false) {
    const Multivector<R> vr = to_ring<R>(v);
    return improper ? vr * a * vr : vr * a * to_ring<R>(v.reversed());
}

/// The reflector I*s_mu; mu = 0 is the inversion (s_0 = 1).
inline Versor improper_reflector(int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("reflector index must be 0..3");
    const auto pseudo = sigma_pseudoscalar();
    return mu == 0 ? pseudo : pseudo * sigma_vector(mu);
}

/// Handedness of a vector triple: sign of the pseudoscalar coefficient of
/// v1 ^ v2 ^ v3; zero when coplanar.
inline int orientation(const Multivector<double>& v1, const Multivector<double>& v2,
                       const Multivector<double>& v3, double tol = kTol) {
    const auto w = outer(outer(v1, v2), v3);
    const double c = w[w.algebra().pseudoscalar_mask()];
    if (std::abs(c) <= tol) return 0;
    return c > 0.0 ? 1 : -1;
}

}  // namespace spinga
