/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to the ffneg library: logarithmic negativity, bounds and
 * dissipative dynamics of fermionic Gaussian states.
 *
 * Conventions
 *   - A state on N modes is stored through the real antisymmetric 2N x 2N
 *     matrix m with Gamma = i m; mode q owns Majoranas 2q and 2q+1.
 *   - Matrices cross the boundary as row-major double arrays.
 *   - Subsystem A is given as a list of mode indices; an empty list (NULL, 0)
 *     selects the first half of the chain. B is the complement.
 *   - Every fallible call returns an ffneg_status. On failure
 *     ffneg_last_error() describes the problem (thread-local, valid until the
 *     next failing call on the same thread) and output handles are untouched.
 *   - Strings returned through char** are released with ffneg_string_free;
 *     handles with the matching *_free function. Free functions accept NULL.
 */

#ifndef FFNEG_FFNEG_H
#define FFNEG_FFNEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FFNEG_BUILDING_LIBRARY)
#define FFNEG_API __declspec(dllexport)
#else
#define FFNEG_API __declspec(dllimport)
#endif
#else
#define FFNEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ffneg_status {
  FFNEG_OK = 0,
  FFNEG_ERR_INVALID_ARGUMENT = 1,
  FFNEG_ERR_CONFIG = 2,
  FFNEG_ERR_NUMERICAL = 3,
  FFNEG_ERR_SINGULAR_GAMMA_A = 4,
  FFNEG_ERR_SIZE_CAP = 5,
  FFNEG_ERR_DIVERGENT = 6,
  FFNEG_ERR_UNIT_CIRCLE = 7,
  FFNEG_ERR_SINGULAR_BLOCK = 8,
  FFNEG_ERR_INVALID_STATE = 9,
  FFNEG_ERR_INTERNAL = 99
} ffneg_status;

typedef struct ffneg_covariance ffneg_covariance;
typedef struct ffneg_hamiltonian ffneg_hamiltonian;
typedef struct ffneg_generator ffneg_generator;
typedef struct ffneg_table ffneg_table;

FFNEG_API const char *ffneg_version(void);
FFNEG_API const char *ffneg_last_error(void);
FFNEG_API const char *ffneg_status_name(ffneg_status status);
FFNEG_API void ffneg_string_free(char *text);

/* Numerical warnings (spectrum clipping, ill-conditioned quadrature nodes)
 * go to stderr unless disabled. */
FFNEG_API void ffneg_set_warnings_enabled(int enabled);

/* ---- covariance matrices ---------------------------------------------- */

FFNEG_API ffneg_status ffneg_covariance_create(size_t n_modes, const double *m, ffneg_covariance **out);
FFNEG_API ffneg_status ffneg_covariance_zero(size_t n_modes, ffneg_covariance **out);
FFNEG_API ffneg_status ffneg_covariance_vacuum(size_t n_modes, ffneg_covariance **out);
/* Odd (0-based) sites occupied; n_modes must be even. */
FFNEG_API ffneg_status ffneg_covariance_cdw(size_t n_modes, ffneg_covariance **out);
/* O ((+)_j nu_j J) O^T with O Haar on SO(2N), nu_j uniform in [0, nu_max]. */
FFNEG_API ffneg_status ffneg_covariance_random(size_t n_modes, uint64_t seed, double nu_max, ffneg_covariance **out);
/* Gibbs state of the Hamiltonian at inverse temperature beta. */
FFNEG_API ffneg_status ffneg_covariance_gibbs(const ffneg_hamiltonian *h, double beta, ffneg_covariance **out);
/* {"n_modes": N, "m": [row-major 2N x 2N]}; unknown keys are rejected. */
FFNEG_API ffneg_status ffneg_covariance_from_json(const char *json, ffneg_covariance **out);
FFNEG_API ffneg_status ffneg_covariance_to_json(const ffneg_covariance *gamma, char **out);
FFNEG_API size_t ffneg_covariance_n_modes(const ffneg_covariance *gamma);
/* Copies m (row-major); len must be (2N)^2. */
FFNEG_API ffneg_status ffneg_covariance_matrix(const ffneg_covariance *gamma, double *out, size_t len);
FFNEG_API ffneg_status ffneg_covariance_purity(const ffneg_covariance *gamma, double *out);
FFNEG_API void ffneg_covariance_free(ffneg_covariance *gamma);

/* ---- negativity and bounds -------------------------------------------- */

typedef enum ffneg_method {
  FFNEG_METHOD_PENCIL = 0,  /* generalized Schur of the twisted pencil */
  FFNEG_METHOD_TWISTED = 1, /* twisted covariance; needs invertible Gamma_A */
  FFNEG_METHOD_ORACLE = 2   /* dense partial transpose; N <= 5 */
} ffneg_method;

FFNEG_API ffneg_status ffneg_negativity(const ffneg_covariance *gamma, const int *modes_a, size_t n_a,
                                        ffneg_method method, double *out);
/* Pencil result as {"value", "roots": [{"re", "im"}], "infinite_count"}. */
FFNEG_API ffneg_status ffneg_negativity_json(const ffneg_covariance *gamma, const int *modes_a, size_t n_a,
                                             char **out);

typedef struct ffneg_bound_report {
  double upper;
  int upper_applicable;
  int upper_at_boundary;
  double lower;
  double improved_lower;
  double simple_upper;
  double simple_lower;
  double k_plus;
  double k_minus;
  double gamma_ab_opnorm;
  double gamma_ab_frobenius;
} ffneg_bound_report;

/* k_override <= 0 selects k_minus = 1 - max(||Gamma_A||, ||Gamma_B||). */
FFNEG_API ffneg_status ffneg_bounds(const ffneg_covariance *gamma, const int *modes_a, size_t n_a, double k_override,
                                    ffneg_bound_report *out);
FFNEG_API ffneg_status ffneg_bounds_json(const ffneg_covariance *gamma, const int *modes_a, size_t n_a, char **out);

/* ---- models ------------------------------------------------------------- */

/* H-hat = sum_jk H_jk c_j c_k with H = i k; k is real antisymmetric, row-major. */
FFNEG_API ffneg_status ffneg_hamiltonian_create(size_t n_modes, const double *k, ffneg_hamiltonian **out);
FFNEG_API ffneg_status ffneg_hamiltonian_tight_binding(size_t n_modes, double t, ffneg_hamiltonian **out);
FFNEG_API ffneg_status ffneg_hamiltonian_kitaev(size_t n_modes, double t, ffneg_hamiltonian **out);
FFNEG_API ffneg_status ffneg_hamiltonian_long_range(size_t n_modes, double t, double alpha, ffneg_hamiltonian **out);
FFNEG_API size_t ffneg_hamiltonian_n_modes(const ffneg_hamiltonian *h);
FFNEG_API ffneg_status ffneg_hamiltonian_matrix(const ffneg_hamiltonian *h, double *out, size_t len);
FFNEG_API void ffneg_hamiltonian_free(ffneg_hamiltonian *h);

/* Lindblad operators L_mu = sum_j L_{mu j} c_j; l_re and l_im are n_ops x 2N
 * row-major (l_im may be NULL). */
FFNEG_API ffneg_status ffneg_generator_create(const ffneg_hamiltonian *h, size_t n_ops, const double *l_re,
                                              const double *l_im, ffneg_generator **out);
/* L_j = sqrt(gamma) f_j on every site. */
FFNEG_API ffneg_status ffneg_generator_uniform_loss(const ffneg_hamiltonian *h, double gamma, ffneg_generator **out);
FFNEG_API void ffneg_generator_free(ffneg_generator *gen);

/* ---- dynamics and rates ------------------------------------------------ */

typedef enum ffneg_evolve_method { FFNEG_EVOLVE_EXACT = 0, FFNEG_EVOLVE_RK4 = 1 } ffneg_evolve_method;

/* dt <= 0 selects the default RK4 step; ignored by the exact propagator. */
FFNEG_API ffneg_status ffneg_evolve(const ffneg_covariance *gamma0, const ffneg_generator *gen, double t,
                                    ffneg_evolve_method method, double dt, ffneg_covariance **out);

/* dm/dt for the state, row-major (2N)^2. */
FFNEG_API ffneg_status ffneg_dgamma_dt(const ffneg_covariance *gamma, const ffneg_generator *gen, double *out,
                                       size_t len);

typedef struct ffneg_rate_report {
  double total;
  double local;
  double inter;
  double increase_bound;
  double magnitude_bound;
  double dgamma_trace_norm;
  int used_quadrature;
  int singular;
} ffneg_rate_report;

FFNEG_API ffneg_status ffneg_rate(const ffneg_covariance *gamma, const ffneg_generator *gen, const int *modes_a,
                                  size_t n_a, ffneg_rate_report *out);

/* C^2 |I| |dA| G(dist); FFNEG_ERR_DIVERGENT unless alpha > (dimension + 1)/2. */
FFNEG_API ffneg_status ffneg_area_law_bound(double c, double alpha, int dimension, int internal_dof,
                                            double boundary_size, double dist, double *out);

/* ---- tables ------------------------------------------------------------- */

typedef enum ffneg_model {
  FFNEG_MODEL_TIGHT_BINDING = 0,
  FFNEG_MODEL_KITAEV = 1,
  FFNEG_MODEL_LONG_RANGE = 2
} ffneg_model;

typedef struct ffneg_temperature_sweep_config {
  ffneg_model model;
  size_t n_modes;
  double t;
  double alpha;
  const double *betas;
  size_t n_betas;
  const int *modes_a;
  size_t n_a;
} ffneg_temperature_sweep_config;

typedef struct ffneg_area_law_config {
  const int *sizes;
  size_t n_sizes;
  double t;
  double alpha;
  double beta;
} ffneg_area_law_config;

typedef struct ffneg_dynamic_sweep_config {
  const int *sizes;
  size_t n_sizes;
  double t;
  double alpha;
  double gamma;
  int random_init;
  int samples;
  uint64_t seed;
  double t_eval;
  double nu_max;
  /* Nonzero: one row per sample instead of per-size statistics. */
  int per_sample;
} ffneg_dynamic_sweep_config;

typedef struct ffneg_oracle_check_config {
  size_t n_modes;
  int samples;
  uint64_t seed;
  double nu_max;
} ffneg_oracle_check_config;

FFNEG_API ffneg_status ffneg_trajectory(const ffneg_covariance *gamma0, const ffneg_generator *gen,
                                        const double *times, size_t n_times, const int *modes_a, size_t n_a,
                                        ffneg_table **out);
FFNEG_API ffneg_status ffneg_sweep_temperature(const ffneg_temperature_sweep_config *config, int workers,
                                               ffneg_table **out);
FFNEG_API ffneg_status ffneg_sweep_area_law(const ffneg_area_law_config *config, int workers, ffneg_table **out);
FFNEG_API ffneg_status ffneg_sweep_dynamic(const ffneg_dynamic_sweep_config *config, int workers, ffneg_table **out);
FFNEG_API ffneg_status ffneg_oracle_check(const ffneg_oracle_check_config *config, int workers, ffneg_table **out);
FFNEG_API ffneg_status ffneg_rate_vs_cut(const ffneg_covariance *gamma, const ffneg_generator *gen, const int *cuts,
                                         size_t n_cuts, int workers, ffneg_table **out);

FFNEG_API size_t ffneg_table_columns(const ffneg_table *table);
FFNEG_API size_t ffneg_table_rows(const ffneg_table *table);
/* Pointer owned by the table. */
FFNEG_API const char *ffneg_table_column_name(const ffneg_table *table, size_t col);
/* Numeric cells only; text cells give FFNEG_ERR_INVALID_ARGUMENT. */
FFNEG_API ffneg_status ffneg_table_value(const ffneg_table *table, size_t row, size_t col, double *out);
/* Any cell, doubles at 17 significant digits. */
FFNEG_API ffneg_status ffneg_table_cell_text(const ffneg_table *table, size_t row, size_t col, char **out);
/* Header row plus data rows. */
FFNEG_API ffneg_status ffneg_table_to_csv(const ffneg_table *table, char **out);
FFNEG_API void ffneg_table_free(ffneg_table *table);

#ifdef __cplusplus
}
#endif

#endif /* FFNEG_FFNEG_H */
