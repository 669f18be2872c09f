#ifndef EISENFUN_H
#define EISENFUN_H

/* Generated from the eisenfun-ffi crate by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an FFI call.
 */
typedef enum EisenStatus {
  /**
   * Success; out-parameters are valid.
   */
  EISEN_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  EISEN_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of range (bad order, index, dimension, tolerance).
   */
  EISEN_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A denominator vanished at the evaluation point.
   */
  EISEN_STATUS_POLE = 3,
  /**
   * A series or quadrature did not converge within its budget.
   */
  EISEN_STATUS_NO_CONVERGENCE = 4,
  /**
   * The transform integrand does not decay inside the window.
   */
  EISEN_STATUS_NOT_DECAYED = 5,
  /**
   * Evaluation overflowed or produced a non-finite value.
   */
  EISEN_STATUS_NON_FINITE = 6,
} EisenStatus;

/**
 * Opaque quadrature configuration; create with `eisen_quadrature_new` or
 * `eisen_quadrature_default`, release with `eisen_quadrature_free`.
 */
typedef struct EisenQuadrature EisenQuadrature;

/**
 * A complex number as a plain pair of doubles.
 */
typedef struct EisenComplex {
  double re;
  double im;
} EisenComplex;

/**
 * Real-valued callback: f(x, context). The context pointer is passed
 * through untouched and may be null.
 */
typedef double (*EisenRealFn)(double x, void *context);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; never freed.
 */
const char *eisen_version(void);

/**
 * Component e_k(x) of the order-m split of the exponential, real argument.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_phf(uint32_t order, uint32_t k, double x, double *out);

/**
 * Component e_k(x) for a complex argument.
 *
 * # Safety
 * `out` must be null or valid for writing one EisenComplex.
 */
enum EisenStatus eisen_phf_complex(uint32_t order,
                                   uint32_t k,
                                   struct EisenComplex x,
                                   struct EisenComplex *out);

/**
 * The same component from the unit-rotation projection instead of the
 * series; agreement of the two routes is a library-level invariant.
 *
 * # Safety
 * `out` must be null or valid for writing one EisenComplex.
 */
enum EisenStatus eisen_phf_projection(uint32_t order,
                                      uint32_t k,
                                      struct EisenComplex x,
                                      struct EisenComplex *out);

/**
 * e_k(-x) computed from the component values at +x via the reflection
 * formulas (order 3).
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_phf_reflect(uint32_t k, double x, double *out);

/**
 * The cubic determinant e_0^3 + e_1^3 + e_2^3 - 3 e_0 e_1 e_2, identically 1.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_delta(double x, double *out);

/**
 * Tangent ratio e_num(x)/e_den(x), order 3.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_tangent(uint32_t num, uint32_t den, double x, double *out);

/**
 * Secant 1/e_0(x).
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_secant(double x, double *out);

/**
 * Two-variable Hermite polynomial H_n(x, y).
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_hermite2(uint32_t n, double x, double y, double *out);

/**
 * Cyclic component j of the rotated binomial (x + wy)^n.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_pseudo_hermite3(uint32_t n, double x, double y, uint32_t j, double *out);

/**
 * Two-variable Laguerre polynomial L_n(x, y).
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_laguerre2(uint32_t n, double x, double y, double *out);

/**
 * Higher-order Hermite polynomial over the variable list xs[0..len].
 *
 * # Safety
 * `xs` must be null or valid for reading `len` f64 values; `out` must be
 * null or valid for writing one f64.
 */
enum EisenStatus eisen_hermite_multi(uint32_t n, const double *xs, size_t len, double *out);

/**
 * Component g_j(x, y) of the two-variable exponential generating function.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_g_component(uint32_t j, double x, double y, double *out);

/**
 * Closed form of the Gaussian transform component m at wavenumber k.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_gaussian_eft_closed(uint32_t m, double k, double *out);

/**
 * New quadrature configuration: window [-half_width, half_width],
 * successive-estimate tolerance, and refinement budget.
 *
 * # Safety
 * `out` must be valid for writing one pointer. On `EISEN_STATUS_OK` the
 * caller owns the handle and must release it with `eisen_quadrature_free`.
 */
enum EisenStatus eisen_quadrature_new(double half_width,
                                      double abs_tol,
                                      uint32_t max_refinements,
                                      struct EisenQuadrature **out);

/**
 * Default quadrature configuration (window 10, tolerance 1e-10, budget 20).
 * The caller owns the handle and must release it with
 * `eisen_quadrature_free`.
 */
struct EisenQuadrature *eisen_quadrature_default(void);

/**
 * Releases a quadrature handle; null is a no-op.
 *
 * # Safety
 * `quad` must be null or a handle obtained from this library that has not
 * been freed already.
 */
void eisen_quadrature_free(struct EisenQuadrature *quad);

/**
 * Transform of the callback against the selected kernel variant (1 or 2)
 * at wavenumber k.
 *
 * # Safety
 * `f` must be a valid callback for the duration of the call; `context` is
 * passed through to it untouched. `quad` must be a live quadrature handle.
 * `out` must be null or valid for writing one EisenComplex.
 */
enum EisenStatus eisen_eft(EisenRealFn f,
                           void *context,
                           double k,
                           uint32_t variant,
                           const struct EisenQuadrature *quad,
                           struct EisenComplex *out);

/**
 * Component m of the transform of the callback at wavenumber k.
 *
 * # Safety
 * As for `eisen_eft`; `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_eft_component(EisenRealFn f,
                                     void *context,
                                     uint32_t m,
                                     double k,
                                     const struct EisenQuadrature *quad,
                                     double *out);

/**
 * Squared norm of the cyclic coherent component |alpha_j> on an N-level
 * truncation; equals e_j(|alpha|^2) up to the factorial tail.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_coherent_norm_sq(struct EisenComplex alpha,
                                        uint32_t j,
                                        uint32_t dim,
                                        double *out);

/**
 * Relative residual of the cubic ladder eigenrelation on |alpha_j>.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_cubic_eigencheck(struct EisenComplex alpha,
                                        uint32_t j,
                                        uint32_t dim,
                                        double *out);

/**
 * Deviation of the truncated [p, q] commutator from -i on the interior
 * block.
 *
 * # Safety
 * `out` must be null or valid for writing one f64.
 */
enum EisenStatus eisen_pq_commutator_deviation(uint32_t dim, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EISENFUN_H */
