#ifndef BIVECTOR_BELL_H
#define BIVECTOR_BELL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, also used as CLI exit codes. */
#define BB_OK 0      /* success; for verification: every check confirmed */
#define BB_REFUTED 1 /* verification completed with at least one refuted check */
#define BB_USAGE 2   /* invalid argument */
#define BB_RUNTIME 3 /* internal failure */

/* Library version, static storage. */
const char* bb_version(void);

/* Message for the most recent failure on the calling thread, static
 * storage.  Empty string when no failure has occurred. */
const char* bb_last_error(void);

/* Model names accepted wherever a `model` argument appears. */
#define BB_MODEL_LOCAL_SIGN "local-sign"
#define BB_MODEL_CHRISTIAN_BIVECTOR "christian-bivector"

typedef struct bb_verify_run bb_verify_run;
typedef struct bb_simulation bb_simulation;
typedef struct bb_chsh_run bb_chsh_run;

/* ---- verification checks ----
 *
 * Runs every check whose id matches the glob `filter` ('*' and '?';
 * NULL or "" runs all) with the given seed.  On BB_OK or BB_REFUTED a
 * handle is stored in *out and must be freed with bb_verify_free; the
 * two codes report whether every matched check confirmed.  BB_USAGE
 * (filter matched nothing) and BB_RUNTIME leave *out untouched. */
int bb_verify(const char* filter, uint64_t seed, bb_verify_run** out);

size_t bb_verify_check_count(const bb_verify_run* run);
size_t bb_verify_confirmed_count(const bb_verify_run* run);

/* ---- correlation sweep ----
 *
 * Estimates E(a, b) for the given model at each angle in `thetas`
 * (radians; Alice at 0, Bob at theta, both in the e1e2 plane) over
 * `trials` hidden states per angle.  Results for one seed are
 * bit-identical across runs. */
int bb_simulate(const char* model, const double* thetas, size_t theta_count,
                uint64_t trials, uint64_t seed, bb_simulation** out);

size_t bb_simulate_row_count(const bb_simulation* sim);
/* Mean / standard error / quantum prediction -cos(theta) of row i. */
int bb_simulate_row(const bb_simulation* sim, size_t i, double* theta,
                    double* mean, double* stderr_of_mean, double* quantum);

/* ---- CHSH ----
 *
 * angles[4] = {a, a_prime, b, b_prime} in radians, all in the e1e2
 * plane.  Estimates the four correlations E(a,b), E(a,b'), E(a',b),
 * E(a',b') and S = E(a,b) - E(a,b') + E(a',b) + E(a',b'). */
int bb_chsh(const char* model, const double angles[4], uint64_t trials,
            uint64_t seed, bb_chsh_run** out);

double bb_chsh_s_value(const bb_chsh_run* run);
double bb_chsh_quantum_value(const bb_chsh_run* run);

/* ---- rendering ----
 *
 * `format` is "json", "csv", or "text".  The returned string is owned
 * by the handle and stays valid until the next render call on the same
 * handle or until the handle is freed.  NULL on unknown format (see
 * bb_last_error). */
const char* bb_verify_render(bb_verify_run* run, const char* format);
const char* bb_simulate_render(bb_simulation* sim, const char* format);
const char* bb_chsh_render(bb_chsh_run* run, const char* format);

void bb_verify_free(bb_verify_run* run);
void bb_simulate_free(bb_simulation* sim);
void bb_chsh_free(bb_chsh_run* run);

#ifdef __cplusplus
}
#endif

#endif /* BIVECTOR_BELL_H */
