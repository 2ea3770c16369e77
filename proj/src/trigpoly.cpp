#include "spinga/trigpoly.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinga {

PhaseVar fresh_phase(const std::string& base) {
    static std::atomic<std::uint64_t> counter{0};
    return PhaseVar{base + "." + std::to_string(counter.fetch_add(1))};
}

TrigPoly::TrigPoly(double constant) {
    if (std::abs(constant) >= kPrune) terms_[Monomial{}] = constant;
}

TrigPoly TrigPoly::cosine(const PhaseVar& v, int harmonic) {
    if (harmonic < 1) throw std::invalid_argument("harmonic must be >= 1");
    if (harmonic > kHarmonicCap)
        throw std::domain_error("harmonic cap exceeded for variable " + v.id);
    TrigPoly p;
    p.terms_[Monomial{Factor{v.id, harmonic, Parity::cos}}] = 1.0;
    return p;
}

TrigPoly TrigPoly::sine(const PhaseVar& v, int harmonic) {
    if (harmonic < 1) throw std::invalid_argument("harmonic must be >= 1");
    if (harmonic > kHarmonicCap)
        throw std::domain_error("harmonic cap exceeded for variable " + v.id);
    TrigPoly p;
    p.terms_[Monomial{Factor{v.id, harmonic, Parity::sin}}] = 1.0;
    return p;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
    TrigPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    out.prune();
    return out;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
    TrigPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    out.prune();
    return out;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

TrigPoly TrigPoly::operator*(double s) const {
    TrigPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
    out.prune();
    return out;
}

namespace {

struct PartialTerm {
    TrigPoly::Monomial factors;
    double coeff;
};

// Product of two factors of the same variable, expanded by product-to-sum:
//   cos A cos B = 1/2 cos(A-B) + 1/2 cos(A+B)
//   sin A sin B = 1/2 cos(A-B) - 1/2 cos(A+B)
//   sin A cos B = 1/2 sin(A+B) + 1/2 sin(A-B)
// A harmonic of zero collapses: cos(0) = 1 carries the weight, sin(0) drops;
// a negative harmonic folds back with cos even and sin odd.
struct Harmonic {
    int k;
    TrigPoly::Parity parity;
    double weight;  // zero marks a dropped term
};

Harmonic normalize(int k, TrigPoly::Parity parity, double weight) {
    if (k == 0) {
        if (parity == TrigPoly::Parity::sin) return {0, parity, 0.0};
        return {0, TrigPoly::Parity::cos, weight};  // cos(0) = 1
    }
    if (k < 0) {
        if (parity == TrigPoly::Parity::sin) return {-k, parity, -weight};
        return {-k, parity, weight};
    }
    return {k, parity, weight};
}

std::array<Harmonic, 2> combine(const TrigPoly::Factor& a, const TrigPoly::Factor& b) {
    using P = TrigPoly::Parity;
    const int sum = a.harmonic + b.harmonic;
    const int diff = a.harmonic - b.harmonic;
    if (a.parity == P::cos && b.parity == P::cos)
        return {normalize(diff, P::cos, 0.5), normalize(sum, P::cos, 0.5)};
    if (a.parity == P::sin && b.parity == P::sin)
        return {normalize(diff, P::cos, 0.5), normalize(sum, P::cos, -0.5)};
    if (a.parity == P::sin && b.parity == P::cos)
        return {normalize(sum, P::sin, 0.5), normalize(diff, P::sin, 0.5)};
    // cos A sin B = 1/2 sin(A+B) - 1/2 sin(A-B)
    return {normalize(sum, P::sin, 0.5), normalize(diff, P::sin, -0.5)};
}

}  // namespace

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
    TrigPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<PartialTerm> partials{{Monomial{}, ca * cb}};
            // Merge the two sorted factor lists variable by variable.
            std::size_t ia = 0, ib = 0;
            while (ia < ma.size() || ib < mb.size()) {
                if (ib == mb.size() || (ia < ma.size() && ma[ia].var < mb[ib].var)) {
                    for (auto& p : partials) p.factors.push_back(ma[ia]);
                    ++ia;
                } else if (ia == ma.size() || mb[ib].var < ma[ia].var) {
                    for (auto& p : partials) p.factors.push_back(mb[ib]);
                    ++ib;
                } else {
                    // Shared variable: each partial splits into two.
                    const auto split = combine(ma[ia], mb[ib]);
                    for (const auto& h : split)
                        if (h.k > kHarmonicCap)
                            throw std::domain_error("harmonic cap exceeded for variable " +
                                                    ma[ia].var);
                    std::vector<PartialTerm> next;
                    next.reserve(partials.size() * 2);
                    for (const auto& p : partials) {
                        for (const auto& h : split) {
                            if (h.weight == 0.0) continue;
                            PartialTerm q = p;
                            q.coeff *= h.weight;
                            if (h.k > 0) q.factors.push_back(Factor{ma[ia].var, h.k, h.parity});
                            next.push_back(std::move(q));
                        }
                    }
                    partials = std::move(next);
                    ++ia;
                    ++ib;
                }
            }
            for (const auto& p : partials) out.add_term(p.factors, p.coeff);
        }
    }
    out.prune();
    return out;
}

TrigPoly TrigPoly::expect(const std::set<std::string>& vars) const {
    TrigPoly out;
    for (const auto& [m, c] : terms_) {
        bool drops = false;
        for (const auto& f : m)
            if (vars.count(f.var)) {
                drops = true;
                break;
            }
        if (!drops) out.terms_[m] = c;
    }
    return out;
}

TrigPoly TrigPoly::expect_all() const {
    TrigPoly out;
    const auto it = terms_.find(Monomial{});
    if (it != terms_.end()) out.terms_[Monomial{}] = it->second;
    return out;
}

double TrigPoly::eval(const std::map<std::string, double>& assignment) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double value = c;
        for (const auto& f : m) {
            const auto it = assignment.find(f.var);
            if (it == assignment.end())
                throw std::invalid_argument("missing assignment for variable " + f.var);
            const double arg = f.harmonic * it->second;
            value *= (f.parity == Parity::cos) ? std::cos(arg) : std::sin(arg);
        }
        total += value;
    }
    return total;
}

double TrigPoly::constant_term() const {
    const auto it = terms_.find(Monomial{});
    return it == terms_.end() ? 0.0 : it->second;
}

bool TrigPoly::is_constant(double tol) const {
    for (const auto& [m, c] : terms_)
        if (!m.empty() && std::abs(c) > tol) return false;
    return true;
}

bool TrigPoly::is_zero(double tol) const {
    for (const auto& [m, c] : terms_)
        if (std::abs(c) > tol) return false;
    return true;
}

double TrigPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

std::set<std::string> TrigPoly::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m) vars.insert(f.var);
    return vars;
}

std::string TrigPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (const auto& f : m) {
            os << "*" << (f.parity == Parity::cos ? "cos" : "sin") << "(";
            if (f.harmonic != 1) os << f.harmonic << "*";
            os << f.var << ")";
        }
    }
    return os.str();
}

void TrigPoly::add_term(const Monomial& m, double coeff) {
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) it->second += coeff;
}

void TrigPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kPrune)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Multivector<TrigPoly> expect(const Multivector<TrigPoly>& a, const std::set<std::string>& vars) {
    Multivector<TrigPoly> out(a.algebra());
    for (unsigned i = 0; i < a.size(); ++i) out[i] = a[i].expect(vars);
    return out;
}

Multivector<double> expect_all(const Multivector<TrigPoly>& a) {
    Multivector<double> out(a.algebra());
    for (unsigned i = 0; i < a.size(); ++i) out[i] = a[i].expect_all().constant_term();
    return out;
}

Multivector<double> eval(const Multivector<TrigPoly>& a,
                         const std::map<std::string, double>& assignment) {
    Multivector<double> out(a.algebra());
    for (unsigned i = 0; i < a.size(); ++i) out[i] = a[i].eval(assignment);
    return out;
}

}  // namespace spinga
