#ifndef LUCASLAB_H
#define LUCASLAB_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LlStatus {
  LL_STATUS_OK = 0,
  LL_STATUS_NULL_POINTER = 1,
  LL_STATUS_INVALID_INPUT = 2,
  LL_STATUS_INVALID_DOMAIN = 3,
  LL_STATUS_OVERFLOW = 4,
  /**
   * the solver stopped before every residual met the tolerance
   */
  LL_STATUS_NOT_CONVERGED = 5,
  /**
   * a point lies too close to a pole, contour or sampling radius
   */
  LL_STATUS_GEOMETRY = 6,
  /**
   * quadrature or construction check failed
   */
  LL_STATUS_NUMERICAL = 7,
  LL_STATUS_PANIC = 8,
} LlStatus;

/**
 * Open convex domain (disk or polygon).
 */
typedef struct LlDomain LlDomain;

/**
 * Coefficient-form polynomial.
 */
typedef struct LlPolynomial LlPolynomial;

/**
 * Roots with per-root residuals.
 */
typedef struct LlRoots LlRoots;

typedef struct LlComplex {
  double re;
  double im;
} LlComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. Valid
 * until the next failing call on the same thread.
 */
const char *ll_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void ll_string_free(char *s);

/**
 * Polynomial from `len` ascending coefficients.
 *
 * # Safety
 * `coeffs` must point to `len` values; `out_poly` must be writable.
 */
enum LlStatus ll_polynomial_new(const struct LlComplex *coeffs,
                                size_t len,
                                struct LlPolynomial **out_poly);

/**
 * Polynomial from JSON `{"coeffs": [[re, im], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out_poly` must be writable.
 */
enum LlStatus ll_polynomial_from_json(const char *json, struct LlPolynomial **out_poly);

/**
 * Monic-times-`leading` polynomial with the given roots.
 *
 * # Safety
 * `roots` must point to `len` values; `out_poly` must be writable.
 */
enum LlStatus ll_polynomial_from_roots(const struct LlComplex *roots,
                                       size_t len,
                                       struct LlComplex leading,
                                       struct LlPolynomial **out_poly);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void ll_polynomial_free(struct LlPolynomial *p);

/**
 * Degree, or -1 for the zero polynomial.
 *
 * # Safety
 * Valid handle and writable `out_degree`.
 */
enum LlStatus ll_polynomial_degree(const struct LlPolynomial *p, int64_t *out_degree);

/**
 * # Safety
 * Valid handle and writable `out_value`.
 */
enum LlStatus ll_polynomial_evaluate(const struct LlPolynomial *p,
                                     struct LlComplex z,
                                     struct LlComplex *out_value);

/**
 * # Safety
 * Valid handle and writable `out_poly`.
 */
enum LlStatus ll_polynomial_derivative(const struct LlPolynomial *p,
                                       struct LlPolynomial **out_poly);

/**
 * # Safety
 * `out_domain` must be writable.
 */
enum LlStatus ll_domain_disk(struct LlComplex center, double radius, struct LlDomain **out_domain);

/**
 * Convex polygon from counterclockwise vertices.
 *
 * # Safety
 * `vertices` must point to `len` values; `out_domain` must be writable.
 */
enum LlStatus ll_domain_polygon(const struct LlComplex *vertices,
                                size_t len,
                                struct LlDomain **out_domain);

/**
 * Domain from JSON, e.g. `{"disk": {"center": [0, 0], "radius": 1}}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out_domain` must be writable.
 */
enum LlStatus ll_domain_from_json(const char *json, struct LlDomain **out_domain);

/**
 * # Safety
 * `d` must be null or a handle from this library, not yet freed.
 */
void ll_domain_free(struct LlDomain *d);

/**
 * Open-set membership: signed distance below `-boundary_tol`.
 *
 * # Safety
 * Valid handle and writable `out_inside`.
 */
enum LlStatus ll_domain_contains(const struct LlDomain *d,
                                 struct LlComplex z,
                                 double boundary_tol,
                                 bool *out_inside);

/**
 * # Safety
 * Valid handle and writable `out_distance`.
 */
enum LlStatus ll_domain_distance(const struct LlDomain *d,
                                 struct LlComplex z,
                                 double *out_distance);

/**
 * All roots of `p`. A result is stored even when the status is
 * `NOT_CONVERGED`; it then holds the best iterate.
 *
 * # Safety
 * Valid handle and writable `out_roots`.
 */
enum LlStatus ll_solve(const struct LlPolynomial *p,
                       double tol,
                       size_t max_iter,
                       struct LlRoots **out_roots);

/**
 * Zeros of `p'` for `p` with the given roots.
 *
 * # Safety
 * `roots` must point to `len` values; `out_roots` must be writable.
 */
enum LlStatus ll_critical_points(const struct LlComplex *roots,
                                 size_t len,
                                 double tol,
                                 size_t max_iter,
                                 struct LlRoots **out_roots);

/**
 * # Safety
 * `r` must be null or a handle from this library, not yet freed.
 */
void ll_roots_free(struct LlRoots *r);

/**
 * # Safety
 * Valid handle and writable `out_len`.
 */
enum LlStatus ll_roots_len(const struct LlRoots *r, size_t *out_len);

/**
 * Root `index` and its scaled residual.
 *
 * # Safety
 * Valid handle; `out_root` and `out_residual` writable.
 */
enum LlStatus ll_roots_get(const struct LlRoots *r,
                           size_t index,
                           struct LlComplex *out_root,
                           double *out_residual);

/**
 * Copies up to `capacity` roots into `buffer`.
 *
 * # Safety
 * Valid handle; `buffer` must hold `capacity` values; `out_written` writable.
 */
enum LlStatus ll_roots_copy(const struct LlRoots *r,
                            struct LlComplex *buffer,
                            size_t capacity,
                            size_t *out_written);

/**
 * # Safety
 * Valid handle and writable `out_converged`.
 */
enum LlStatus ll_roots_converged(const struct LlRoots *r, bool *out_converged);

/**
 * Points in `Ω_eps` (or in Ω when `eps == 0`), plus the number of points
 * within grazing distance of the boundary.
 *
 * # Safety
 * `pts` must point to `len` values; outputs writable.
 */
enum LlStatus ll_count_in(const struct LlComplex *pts,
                          size_t len,
                          const struct LlDomain *d,
                          double eps,
                          size_t *out_count,
                          size_t *out_grazing);

/**
 * Zeros of `p` inside `∂Ω_eps` by the argument principle.
 *
 * # Safety
 * Valid handles and writable `out_count`.
 */
enum LlStatus ll_argument_principle_count(const struct LlPolynomial *p,
                                          const struct LlDomain *d,
                                          double eps,
                                          size_t nodes_per_unit,
                                          int64_t *out_count);

/**
 * Ratio report as JSON; free the string with `ll_string_free`.
 *
 * # Safety
 * `p_roots`/`dp_roots` must point to their lengths; valid domain handle;
 * `out_json` writable.
 */
enum LlStatus ll_ratio_report_json(const struct LlComplex *p_roots,
                                   size_t p_len,
                                   const struct LlComplex *dp_roots,
                                   size_t dp_len,
                                   const struct LlDomain *d,
                                   double eps,
                                   size_t n,
                                   char **out_json);

/**
 * The degree-`n` member of a sequence given as SequenceSpec JSON, itself
 * serialized as JSON; free with `ll_string_free`.
 *
 * # Safety
 * `spec_json` must be a NUL-terminated string; `out_json` writable.
 */
enum LlStatus ll_sequence_instance_json(const char *spec_json, size_t n, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LUCASLAB_H */
