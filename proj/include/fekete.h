#ifndef FEKETE_H
#define FEKETE_H

/*
 * fekete -- logarithmic energy on the unit sphere.
 *
 * C interface to the toolkit: closed-form cap energies and linear-term
 * bound constants, quadrature-backed verification, transport checks, and
 * desk-scale minimization of the discrete logarithmic energy.
 *
 * Conventions:
 *   - Functions return FEKETE_OK (0) on success; on failure they return a
 *     nonzero status and leave a human-readable detail in
 *     fekete_last_error() (thread-local).
 *   - Strings returned through char** are heap-allocated; release them
 *     with fekete_string_free().
 *   - Configurations are opaque handles; release with fekete_config_free().
 *   - Reported JSON uses natural-log units throughout.
 *
 * Parallel sections honor the FEKETE_THREADS environment variable
 * (default: available hardware parallelism). Monte-Carlo results are
 * reproducible for a fixed (seed, thread count) pair.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FEKETE_API __declspec(dllexport)
#elif defined(__GNUC__)
#define FEKETE_API __attribute__((visibility("default")))
#else
#define FEKETE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define FEKETE_VERSION "1.0.0"

typedef enum fekete_status {
  FEKETE_OK = 0,
  FEKETE_ERR_INVALID_ARGUMENT = 1,
  FEKETE_ERR_DOMAIN = 2,
  FEKETE_ERR_IO = 3,
  FEKETE_ERR_PARSE = 4,
  FEKETE_ERR_NUMERIC = 5,
  FEKETE_ERR_INTERNAL = 6
} fekete_status;

typedef struct fekete_config fekete_config;

FEKETE_API const char* fekete_version(void);
FEKETE_API const char* fekete_status_message(fekete_status status);

/* Detail for the most recent failure on this thread; empty string if none. */
FEKETE_API const char* fekete_last_error(void);

FEKETE_API void fekete_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Configurations                                                      */

/* xyz: n points, 3 doubles each; renormalized, must be pairwise distinct. */
FEKETE_API fekete_status fekete_config_create(const double* xyz, int n, fekete_config** out);

/* Point-set text format: "x y z" per line, '#' comments. Points are
 * renormalized on load and rejected when |norm - 1| > 1e-6. */
FEKETE_API fekete_status fekete_config_load(const char* path, fekete_config** out);
FEKETE_API fekete_status fekete_config_save(const fekete_config* cfg, const char* path);

FEKETE_API fekete_status fekete_config_spiral(int n, fekete_config** out);
FEKETE_API fekete_status fekete_config_random(int n, uint64_t seed, fekete_config** out);

FEKETE_API int fekete_config_size(const fekete_config* cfg);
FEKETE_API fekete_status fekete_config_point(const fekete_config* cfg, int index,
                                             double xyz_out[3]);
FEKETE_API void fekete_config_free(fekete_config* cfg);

/* ------------------------------------------------------------------ */
/* Geometry and energy primitives                                      */

/* Inputs are renormalized; geodesic distance in radians via atan2. */
FEKETE_API fekete_status fekete_geodesic_distance(const double u[3], const double v[3],
                                                  double* out);

/* Normalized measure sin^2(a/2) of a cap of geodesic radius a in (0, pi]. */
FEKETE_API fekete_status fekete_cap_measure(double a, double* out);

/* Sum over ordered pairs of log(1/|x_i - x_j|). */
FEKETE_API fekete_status fekete_pair_energy(const fekete_config* cfg, double* out);

/* Self-energy of the normalized cap measure under log(1/|x-y|). */
FEKETE_API fekete_status fekete_cap_self_energy(double a, double* out);

/* Exact mutual energy of two disjoint caps (d > 2a). */
FEKETE_API fekete_status fekete_cap_cross_energy_disjoint(double d, double a, double* out);

/* Smeared-measure decomposition of the energy of a configuration at the
 * given eps; JSON fields: pair_sum, self_terms, cross_terms, smeared,
 * kappa, slack (plus error fields for Monte-Carlo pieces). */
FEKETE_API fekete_status fekete_decomposition_json(const fekete_config* cfg, double eps,
                                                   long long overlap_samples, uint64_t seed,
                                                   char** json_out);

/* ------------------------------------------------------------------ */
/* Bound constants and the linear-term maximization                    */

typedef struct fekete_constants {
  double i_sigma;      /* 1/2 - log 2 */
  double kappa;        /* alias of i_sigma in the decomposition */
  double c;            /* sqrt(2*pi/sqrt(3)) */
  double c1;           /* (2 + 3 atanh(1/2))/6 */
  double c2;           /* 1/sqrt(3) */
  double eps_max;      /* c / cos(pi/6) */
  double u2;           /* u(2) = log 2 - 3/4 */
  double v2;           /* v(2) */
  double c_tilde;      /* u(2) + v(2) */
  double c_bhs;        /* conjectured linear-term constant */
  double c_lauritsen;  /* log 2 - 3/4 */
} fekete_constants;

FEKETE_API fekete_status fekete_get_constants(fekete_constants* out);
FEKETE_API fekete_status fekete_constants_json(char** json_out);

/* u(eps) = -1/4 + log(eps) - eps^2/8. */
FEKETE_API fekete_status fekete_u(double eps, double* out);

/* v(eps); clamped to 0 for eps >= eps_max with *clamped_out = 1. */
FEKETE_API fekete_status fekete_v(double eps, double* out, int* clamped_out);

/* Bound report at a given eps in (0, eps_max); includes the maximizer. */
FEKETE_API fekete_status fekete_bound_json(double eps, char** json_out);
FEKETE_API fekete_status fekete_bound_maximize_json(char** json_out);
FEKETE_API fekete_status fekete_maximize(double* eps_star, double* value);

/* CSV grid of (eps, u, v, u+v): header "eps,u,v,total", %.17g fields,
 * LF line endings; steps rows with both endpoints included. */
FEKETE_API fekete_status fekete_plot_grid_csv(double eps_lo, double eps_hi, int steps,
                                              char** csv_out);

/* ------------------------------------------------------------------ */
/* Verification suite                                                  */

typedef struct fekete_verify_options {
  long long samples;    /* Monte-Carlo samples per check (default 1e6) */
  uint64_t seed;
  int inject_sign_flip; /* negative control; forces a failure when set */
} fekete_verify_options;

FEKETE_API void fekete_verify_options_default(fekete_verify_options* opts);

/* Runs the closed-form-vs-oracle table. *all_passed_out is 1 when every
 * check passed. JSON fields: checks[], all_passed, samples, seed. */
FEKETE_API fekete_status fekete_verify_json(const fekete_verify_options* opts,
                                            int* all_passed_out, char** json_out);

/* ------------------------------------------------------------------ */
/* Minimization and the linear-term fit                                */

typedef struct fekete_minimize_options {
  int max_iters;     /* default 50000 */
  double grad_tol;   /* stopping gradient norm; 0 means 1e-10 * N */
  int restarts;      /* default 1; extra restarts use random starts */
  uint64_t seed;
  int random_init;   /* 0: golden-spiral start (default), 1: random */
} fekete_minimize_options;

FEKETE_API void fekete_minimize_options_default(fekete_minimize_options* opts);

/* Minimizes the logarithmic energy of n points. out_config may be NULL.
 * JSON fields: n, energy, iters, grad_norm, converged, stagnated,
 * restarts, best_restart, seed. */
FEKETE_API fekete_status fekete_minimize(int n, const fekete_minimize_options* opts,
                                         fekete_config** out_config, char** json_out);

/* Minimizes for N = nmin, nmin+step, ..., nmax and fits
 * y_N = (E_N - I(sigma) N^2 + N log(N)/2)/N  to  c + d/sqrt(N).
 * When out_dir is non-NULL, writes one point-set file per N there.
 * JSON fields: curve[] (n, energy), c_log_hat, correction_coeff,
 * residual_rms, n_values. */
FEKETE_API fekete_status fekete_fit_clog(int nmin, int nmax, int step,
                                         const fekete_minimize_options* opts,
                                         const char* out_dir, char** json_out);

/* ------------------------------------------------------------------ */
/* Transport checks                                                    */

/* Witness lower bound for W1 against 2 I(mu), plus the triangle
 * comparison for non-hemispheric configurations. *satisfied_out is 1
 * when every applicable check holds. JSON fields: w1_lower, stderr,
 * two_i_mu, two_i_mu_error, satisfied, fejes_toth_rhs,
 * fejes_toth_passed, fejes_toth_skipped, skip_reason, eps, samples,
 * seed. */
FEKETE_API fekete_status fekete_transport_json(const fekete_config* cfg, double eps,
                                               long long samples, uint64_t seed,
                                               int* satisfied_out, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FEKETE_H */
