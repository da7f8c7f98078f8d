/*
 * ballprox C API.
 *
 * Best approximation of bounded operators from the closed unit ball of the
 * compact operators, on model classes with closed-form norms (diagonal,
 * weighted-shift and finite-matrix operators on l2; shift-structured column
 * operators on l1), plus independent certification oracles.
 *
 * Operators and results are opaque handles. Every fallible call returns a
 * bp_status; on failure bp_last_error() and bp_last_error_field() describe
 * the problem for the calling thread. Strings returned through char** are
 * owned by the caller and released with bp_string_free().
 */
#ifndef BALLPROX_BALLPROX_H
#define BALLPROX_BALLPROX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BALLPROX_BUILDING)
#    define BALLPROX_API __declspec(dllexport)
#  else
#    define BALLPROX_API __declspec(dllimport)
#  endif
#else
#  define BALLPROX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bp_status {
  BP_OK = 0,
  BP_ERR_VALIDATION = 1, /* malformed operator or argument */
  BP_ERR_NUMERIC = 2,    /* iterative kernel failed or a postcondition broke */
  BP_ERR_NULL_ARG = 3,
  BP_ERR_INTERNAL = 4
} bp_status;

typedef enum bp_space { BP_SPACE_L1 = 0, BP_SPACE_L2 = 1, BP_SPACE_LINF = 2 } bp_space;

typedef struct bp_operator bp_operator;
typedef struct bp_result bp_result;

BALLPROX_API const char* bp_version(void);
BALLPROX_API const char* bp_status_name(bp_status status);
/* Message and input field of the last failure on this thread ("" if none). */
BALLPROX_API const char* bp_last_error(void);
BALLPROX_API const char* bp_last_error_field(void);

BALLPROX_API void bp_string_free(char* s);

/* Operators -------------------------------------------------------------- */

BALLPROX_API bp_status bp_operator_from_json(const char* json, bp_operator** out);
BALLPROX_API bp_status bp_operator_to_json(const bp_operator* op, char** out);
BALLPROX_API bp_status bp_operator_clone(const bp_operator* op, bp_operator** out);
BALLPROX_API bp_status bp_operator_scale(const bp_operator* op, double c, bp_operator** out);
BALLPROX_API void bp_operator_free(bp_operator* op);
/* 1 for l2 models, 0 for l1 models. */
BALLPROX_API int bp_operator_is_hilbert(const bp_operator* op);

BALLPROX_API bp_status bp_op_norm(const bp_operator* op, double* out);
BALLPROX_API bp_status bp_ess_norm(const bp_operator* op, double* out);
/* l2 models only. */
BALLPROX_API bp_status bp_attains_norm(const bp_operator* op, int* out);
BALLPROX_API bp_status bp_dist_ball(const bp_operator* op, double* out);

/* Best approximants ------------------------------------------------------- */

/* Case analysis for l2 models, column truncation for l1 models. With
 * positive != 0 the input must be a nonnegative diagonal operator and the
 * approximant is positive as well. */
BALLPROX_API bp_status bp_best_approx(const bp_operator* op, int positive, bp_result** out);
/* Soft-threshold at the ball distance (l2 models only). */
BALLPROX_API bp_status bp_soft_threshold_approx(const bp_operator* op, bp_result** out);
BALLPROX_API void bp_result_free(bp_result* r);
BALLPROX_API double bp_result_distance(const bp_result* r);
BALLPROX_API const char* bp_result_branch(const bp_result* r);
BALLPROX_API bp_status bp_result_approximant(const bp_result* r, bp_operator** out);
BALLPROX_API bp_status bp_result_certificate_json(const bp_result* r, char** out);

/* Requires a weighted shift with unimodular weights. */
BALLPROX_API bp_status bp_isometry_distance_check(double a, const bp_operator* op, int* out);

/* Oracles ------------------------------------------------------------------ */

typedef struct bp_search_report {
  int pass;
  int attained;
  double claimed;
  double best_found;
  double tol;
  uint64_t trials;
  uint64_t evaluated;
} bp_search_report;

/* best_competitor may be NULL; otherwise receives a new operator handle. */
BALLPROX_API bp_status bp_competitor_search(const bp_operator* op, double d_claimed, uint64_t trials,
                                            uint64_t seed, double tol, bp_search_report* out,
                                            bp_operator** best_competitor);
/* Full report as JSON (same search as bp_competitor_search). */
BALLPROX_API bp_status bp_competitor_search_json(const bp_operator* op, double d_claimed, uint64_t trials,
                                                 uint64_t seed, double tol, char** out);

BALLPROX_API bp_status bp_finite_section_bounds(const bp_operator* op, size_t n, double* lower, double* upper);
BALLPROX_API bp_status bp_finite_column_oracle(const bp_operator* op, size_t n, double* out);

/* Extreme points ------------------------------------------------------------ */

BALLPROX_API bp_status bp_is_extreme(bp_space space, const double* coords, size_t dim, int* out);
/* out_coords must hold dim doubles. */
BALLPROX_API bp_status bp_project_scalar_multiple(bp_space space, const double* coords, size_t dim, double alpha,
                                                  double* out_coords, double* out_distance);

typedef struct bp_projection_report {
  int pass;
  uint64_t samples;
  uint64_t violations;
  uint64_t near_minimizers;
  double min_distance;
  double radius;
  double allowed_radius;
  double spread;
} bp_projection_report;

BALLPROX_API bp_status bp_verify_unique_projection(bp_space space, const double* coords, size_t dim, double alpha,
                                                   uint64_t samples, uint64_t seed, double tol,
                                                   bp_projection_report* out);
BALLPROX_API bp_status bp_verify_unique_projection_json(bp_space space, const double* coords, size_t dim,
                                                        double alpha, uint64_t samples, uint64_t seed, double tol,
                                                        char** out);

#ifdef __cplusplus
}
#endif

#endif /* BALLPROX_BALLPROX_H */
