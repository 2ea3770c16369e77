#include "spinga/spinga.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "spinga/bell.hpp"
#include "spinga/pauli_oracle.hpp"
#include "spinga/selftest.hpp"
#include "spinga/spin.hpp"

struct spinga_spin {
    spinga::PhasedSpin value;
};

struct spinga_bell {
    spinga::BellPair value;
};

namespace {

thread_local std::string g_last_error;

spinga_status fail(spinga_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <class Fn>
spinga_status guarded(Fn&& fn) {
    try {
        fn();
        return SPINGA_OK;
    } catch (const std::invalid_argument& e) {
        return fail(SPINGA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(SPINGA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(SPINGA_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(SPINGA_ERR_INTERNAL, e.what());
    }
}

spinga::Vec3 vec(const double v[3]) { return {v[0], v[1], v[2]}; }

bool bad(bool ok, const char* what) {
    if (!ok) g_last_error = what;
    return !ok;
}

}  // namespace

extern "C" {

const char* spinga_version(void) { return SPINGA_VERSION_STRING; }

const char* spinga_last_error(void) { return g_last_error.c_str(); }

spinga_status spinga_spin_create_up(spinga_spin** out) {
    if (bad(out != nullptr, "null output handle")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new spinga_spin{
            spinga::make_spin(spinga::SpinDirection::up, spinga::fresh_phase())};
    });
}

spinga_status spinga_spin_create_down(spinga_spin** out) {
    if (bad(out != nullptr, "null output handle")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new spinga_spin{
            spinga::make_spin(spinga::SpinDirection::down, spinga::fresh_phase())};
    });
}

spinga_status spinga_spin_create_frame(int j, spinga_spin** out) {
    if (bad(out != nullptr, "null output handle")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new spinga_spin{spinga::make_spin(j, spinga::fresh_phase())}; });
}

void spinga_spin_destroy(spinga_spin* s) { delete s; }

spinga_status spinga_spin_rotate(const spinga_spin* s, const double target[3],
                                 spinga_spin** out) {
    if (bad(s && target && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new spinga_spin{spinga::rotate_spin(s->value, vec(target))}; });
}

spinga_status spinga_spin_improper(const spinga_spin* s, int mu, spinga_spin** out) {
    if (bad(s && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new spinga_spin{spinga::improper_map(s->value, mu)}; });
}

spinga_status spinga_spin_axis(const spinga_spin* s, double out[3]) {
    if (bad(s && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    out[0] = s->value.axis[0];
    out[1] = s->value.axis[1];
    out[2] = s->value.axis[2];
    return SPINGA_OK;
}

spinga_status spinga_spin_hand(const spinga_spin* s, int* right_handed) {
    if (bad(s && right_handed, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    *right_handed = s->value.hand == spinga::Handedness::right ? 1 : 0;
    return SPINGA_OK;
}

spinga_status spinga_spin_full_square(const spinga_spin* s, double* out) {
    if (bad(s && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = s->value.full_square().constant_term(); });
}

spinga_status spinga_spin_measure(const spinga_spin* s, const double detector[3],
                                  spinga_measurement* out) {
    if (bad(s && detector && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto rec = spinga::sg_measure(s->value, vec(detector));
        *out = spinga_measurement{rec.p_coincide, rec.p_anti, rec.correlation, rec.amp_coincide,
                                  rec.amp_anti};
    });
}

spinga_status spinga_bell_create(int mu, spinga_variant variant, spinga_bell** out) {
    if (bad(out != nullptr, "null output handle")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        spinga::BellVariant v;
        switch (variant) {
            case SPINGA_VARIANT_Y: v = spinga::BellVariant::y; break;
            case SPINGA_VARIANT_Y_PRIME: v = spinga::BellVariant::y_prime; break;
            case SPINGA_VARIANT_Y_DOUBLE_PRIME: v = spinga::BellVariant::y_double_prime; break;
            default: throw std::invalid_argument("unknown Bell variant");
        }
        *out = new spinga_bell{spinga::bell_state(mu, v)};
    });
}

void spinga_bell_destroy(spinga_bell* b) { delete b; }

spinga_status spinga_bell_bipartite(const spinga_bell* b, const double u[3], const double v[3],
                                    double* out) {
    if (bad(b && u && v && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = spinga::bipartite_expectation(b->value, vec(u), vec(v)); });
}

spinga_status spinga_bell_bipartite_bivector(const spinga_bell* b, const double u[3],
                                             const double v[3], double* out) {
    if (bad(b && u && v && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded(
        [&] { *out = spinga::bipartite_expectation_bivector(b->value, vec(u), vec(v)); });
}

spinga_status spinga_bell_partial(const spinga_bell* b, const double direction[3], int which,
                                  double* out) {
    if (bad(b && direction && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = spinga::partial_expectation(b->value, vec(direction), which); });
}

spinga_status spinga_bell_intrinsic_correlation(const spinga_bell* b, double* out) {
    if (bad(b && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = spinga::intrinsic_correlation(b->value); });
}

spinga_status spinga_bell_total_spin_square(const spinga_bell* b, double* out) {
    if (bad(b && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = spinga::total_spin(b->value).square_expected; });
}

spinga_status spinga_bell_closed_form(int mu, const double u[3], const double v[3],
                                      double* out) {
    if (bad(u && v && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = spinga::bipartite_closed_form(mu, vec(u), vec(v)); });
}

spinga_status spinga_bell_gram(int full, double out[16]) {
    if (bad(out != nullptr, "null output")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto g = spinga::spinor_bell_gram(full != 0);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                out[4 * r + c] = g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    });
}

spinga_status spinga_separable_expectation(spinga_separable kind, const double u[3],
                                           const double v[3], double* bipartite,
                                           double* partial1, double* partial2) {
    if (bad(u && v && bipartite && partial1 && partial2, "null argument"))
        return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        spinga::SeparableKind k;
        switch (kind) {
            case SPINGA_SEP_UP_DOWN: k = spinga::SeparableKind::up_down; break;
            case SPINGA_SEP_DOWN_UP: k = spinga::SeparableKind::down_up; break;
            case SPINGA_SEP_UP_UP: k = spinga::SeparableKind::up_up; break;
            case SPINGA_SEP_DOWN_DOWN: k = spinga::SeparableKind::down_down; break;
            default: throw std::invalid_argument("unknown separable kind");
        }
        const auto e = spinga::separable_expectation(k, vec(u), vec(v));
        *bipartite = e.bipartite;
        *partial1 = e.partial_1;
        *partial2 = e.partial_2;
    });
}

spinga_status spinga_oracle_bipartite(int mu, const double u[3], const double v[3],
                                      double* out) {
    if (bad(u && v && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = spinga::oracle::oracle_bipartite(spinga::oracle::bell_for_mu(mu), vec(u), vec(v));
    });
}

spinga_status spinga_oracle_partial(int mu, const double u[3], int which, double* out) {
    if (bad(u && out, "null argument")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = spinga::oracle::oracle_partial(spinga::oracle::bell_for_mu(mu), vec(u), which);
    });
}

spinga_status spinga_oracle_born(const double axis[3], const double detector[3], double* p_plus,
                                 double* p_minus) {
    if (bad(axis && detector && p_plus && p_minus, "null argument"))
        return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto p = spinga::oracle::born_probability(vec(axis), vec(detector));
        *p_plus = p.first;
        *p_minus = p.second;
    });
}

spinga_status spinga_algebra_selftest(int dim, uint64_t seed, int samples,
                                      spinga_algebra_report* out) {
    if (bad(out != nullptr, "null output")) return SPINGA_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const spinga::Algebra* alg = nullptr;
        if (dim == 3)
            alg = &spinga::Algebra::sigma();
        else if (dim == 5)
            alg = &spinga::Algebra::spacetime();
        else
            throw std::invalid_argument("dim must be 3 or 5");
        if (samples < 1) throw std::invalid_argument("samples must be positive");
        const auto r = spinga::algebra_selftest(*alg, seed, samples);
        *out = spinga_algebra_report{r.associativity, r.metric, r.centrality, r.reverse_anti};
    });
}

}  // extern "C"
