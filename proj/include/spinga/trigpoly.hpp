#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "spinga/algebra.hpp"

namespace spinga {

/// Named gauge-phase variable. Fresh ids never repeat (atomic counter).
struct PhaseVar {
    std::string id;

    bool operator==(const PhaseVar& o) const { return id == o.id; }
    bool operator<(const PhaseVar& o) const { return id < o.id; }
};

/// Returns a phase variable with a globally unique id, e.g. "phi.7".
PhaseVar fresh_phase(const std::string& base = "phi");

/// Real trigonometric polynomial in named phase variables.
///
/// A term is a real coefficient times a product of factors cos(k*x) or
/// sin(k*x) over distinct variables x, with harmonic k >= 1. Products expand
/// exactly via product-to-sum identities, so the ring stays closed and the
/// uniform-circle expectation of any term is available in closed form.
class TrigPoly {
public:
    enum class Parity { cos, sin };

    struct Factor {
        std::string var;
        int harmonic;
        Parity parity;

        bool operator<(const Factor& o) const {
            if (var != o.var) return var < o.var;
            if (harmonic != o.harmonic) return harmonic < o.harmonic;
            return parity < o.parity;
        }
        bool operator==(const Factor& o) const {
            return var == o.var && harmonic == o.harmonic && parity == o.parity;
        }
    };

    using Monomial = std::vector<Factor>;  // sorted by variable, one factor per variable

    /// Harmonics beyond this cap abort multiplication; in-scope formulas
    /// never exceed degree 2 per variable, so hitting the cap flags a bug.
    static constexpr int kHarmonicCap = 8;

    /// Coefficients below this magnitude are pruned.
    static constexpr double kPrune = 1e-15;

    TrigPoly() = default;
    explicit TrigPoly(double constant);

    static TrigPoly cosine(const PhaseVar& v, int harmonic = 1);
    static TrigPoly sine(const PhaseVar& v, int harmonic = 1);

    TrigPoly operator+(const TrigPoly& o) const;
    TrigPoly operator-(const TrigPoly& o) const;
    TrigPoly operator-() const;
    TrigPoly operator*(const TrigPoly& o) const;
    TrigPoly operator*(double s) const;

    /// Uniform average over the circle for every listed variable: terms
    /// containing any of them drop; the rest pass through unchanged.
    TrigPoly expect(const std::set<std::string>& vars) const;

    /// Average over every variable present; only the constant term survives.
    TrigPoly expect_all() const;

    /// Numeric value at the given assignment; throws if a variable present
    /// in the polynomial is missing from the assignment.
    double eval(const std::map<std::string, double>& assignment) const;

    double constant_term() const;
    bool is_constant(double tol = kTol) const;
    bool is_zero(double tol = kTol) const;
    bool has_terms() const { return !terms_.empty(); }
    double max_abs_coeff() const;
    std::set<std::string> variables() const;

    const std::map<Monomial, double>& terms() const { return terms_; }

    std::string to_string() const;

private:
    void add_term(const Monomial& m, double coeff);
    void prune();

    std::map<Monomial, double> terms_;  // empty monomial = constant term
};

inline TrigPoly operator*(double s, const TrigPoly& p) { return p * s; }

template <>
struct ring_traits<TrigPoly> {
    static TrigPoly zero() { return TrigPoly(); }
    static TrigPoly one() { return TrigPoly(1.0); }
    static TrigPoly from_real(double v) { return TrigPoly(v); }
    static bool is_zero(const TrigPoly& p, double tol) { return p.is_zero(tol); }
    static bool is_structurally_zero(const TrigPoly& p) { return !p.has_terms(); }
    static double max_abs(const TrigPoly& p) { return p.max_abs_coeff(); }
};

/// Coefficient-wise expectation over the listed phase variables.
Multivector<TrigPoly> expect(const Multivector<TrigPoly>& a, const std::set<std::string>& vars);

/// Coefficient-wise expectation over every phase variable present.
Multivector<double> expect_all(const Multivector<TrigPoly>& a);

/// Coefficient-wise numeric evaluation.
Multivector<double> eval(const Multivector<TrigPoly>& a,
                         const std::map<std::string, double>& assignment);

}  // namespace spinga
