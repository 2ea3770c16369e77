/*
 * spinga C API: spin-1/2 geometric-algebra engine behind opaque handles.
 *
 * Every function returning spinga_status reports SPINGA_OK (0) on success;
 * on failure the handle/output arguments are left untouched and
 * spinga_last_error() describes the problem for the calling thread.
 *
 * Conventions: directions are unit 3-vectors (x, y, z components on the
 * spin frame), hbar = 1, all expectation values are normalized to [-1, 1].
 */
#ifndef SPINGA_H
#define SPINGA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SPINGA_VERSION_STRING "0.1.0"

typedef enum spinga_status {
    SPINGA_OK = 0,
    SPINGA_ERR_INVALID_ARGUMENT = 1,
    SPINGA_ERR_DOMAIN = 2,
    SPINGA_ERR_INTERNAL = 3
} spinga_status;

typedef struct spinga_spin spinga_spin;
typedef struct spinga_bell spinga_bell;

typedef enum spinga_variant {
    SPINGA_VARIANT_Y = 0,
    SPINGA_VARIANT_Y_PRIME = 1,
    SPINGA_VARIANT_Y_DOUBLE_PRIME = 2
} spinga_variant;

typedef enum spinga_separable {
    SPINGA_SEP_UP_DOWN = 0,
    SPINGA_SEP_DOWN_UP = 1,
    SPINGA_SEP_UP_UP = 2,
    SPINGA_SEP_DOWN_DOWN = 3
} spinga_separable;

typedef struct spinga_measurement {
    double p_coincide;
    double p_anti;
    double correlation;
    double amp_coincide;
    double amp_anti;
} spinga_measurement;

typedef struct spinga_algebra_report {
    double associativity;
    double metric;
    double centrality;
    double reverse_antiautomorphism;
} spinga_algebra_report;

const char* spinga_version(void);

/* Message for the last failing call on this thread; empty if none. */
const char* spinga_last_error(void);

/* ---- single spins ---------------------------------------------------- */

spinga_status spinga_spin_create_up(spinga_spin** out);
spinga_status spinga_spin_create_down(spinga_spin** out);
spinga_status spinga_spin_create_frame(int j, spinga_spin** out); /* j = 1..3 */
void spinga_spin_destroy(spinga_spin* s);

spinga_status spinga_spin_rotate(const spinga_spin* s, const double target[3],
                                 spinga_spin** out);
spinga_status spinga_spin_improper(const spinga_spin* s, int mu, spinga_spin** out);
spinga_status spinga_spin_axis(const spinga_spin* s, double out[3]);
/* 1 for right-handed, 0 for left-handed. */
spinga_status spinga_spin_hand(const spinga_spin* s, int* right_handed);
/* Constant value of S * reverse(S); 3/4 in units hbar^2 for any spin. */
spinga_status spinga_spin_full_square(const spinga_spin* s, double* out);
spinga_status spinga_spin_measure(const spinga_spin* s, const double detector[3],
                                  spinga_measurement* out);

/* ---- entangled and separable pairs ----------------------------------- */

spinga_status spinga_bell_create(int mu, spinga_variant variant, spinga_bell** out);
void spinga_bell_destroy(spinga_bell* b);

spinga_status spinga_bell_bipartite(const spinga_bell* b, const double u[3],
                                    const double v[3], double* out);
spinga_status spinga_bell_bipartite_bivector(const spinga_bell* b, const double u[3],
                                             const double v[3], double* out);
spinga_status spinga_bell_partial(const spinga_bell* b, const double direction[3],
                                  int which, double* out);
spinga_status spinga_bell_intrinsic_correlation(const spinga_bell* b, double* out);
spinga_status spinga_bell_total_spin_square(const spinga_bell* b, double* out);
/* Closed form: -u.v for mu = 0, u.v - 2 u^mu v^mu for mu = 1..3. */
spinga_status spinga_bell_closed_form(int mu, const double u[3], const double v[3],
                                      double* out);
/* Row-major 4x4 Gram matrix of the spinor representation; full = 1 for the
 * full spins, 0 for the Stern-Gerlach measured form. */
spinga_status spinga_bell_gram(int full, double out[16]);

spinga_status spinga_separable_expectation(spinga_separable kind, const double u[3],
                                           const double v[3], double* bipartite,
                                           double* partial1, double* partial2);

/* ---- independent standard-QM oracle ---------------------------------- */

/* Tensor-product expectation for the standard Bell state paired with mu
 * (0,1,2,3 -> psi-, phi-, phi+, psi+). */
spinga_status spinga_oracle_bipartite(int mu, const double u[3], const double v[3],
                                      double* out);
spinga_status spinga_oracle_partial(int mu, const double u[3], int which, double* out);
spinga_status spinga_oracle_born(const double axis[3], const double detector[3],
                                 double* p_plus, double* p_minus);

/* ---- randomized algebra suite ---------------------------------------- */

/* dim = 3 for Cl(3,0) or 5 for Cl(2,3). */
spinga_status spinga_algebra_selftest(int dim, uint64_t seed, int samples,
                                      spinga_algebra_report* out);

#ifdef __cplusplus
}
#endif

#endif /* SPINGA_H */
