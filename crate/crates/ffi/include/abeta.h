#ifndef ABETA_H
#define ABETA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AbetaStatus {
  ABETA_STATUS_OK = 0,
  ABETA_STATUS_DOMAIN = 1,
  ABETA_STATUS_LENGTH = 2,
  ABETA_STATUS_NO_ROOT = 3,
  ABETA_STATUS_LIMIT = 4,
  ABETA_STATUS_CONSTRAINT_INFEASIBLE = 5,
  ABETA_STATUS_PRECISION = 6,
  ABETA_STATUS_NULL_POINTER = 7,
  ABETA_STATUS_PANIC = 8,
} AbetaStatus;

typedef enum AbetaExtremal {
  ABETA_EXTREMAL_FTILDE = 0,
  ABETA_EXTREMAL_FTILDE1 = 1,
  ABETA_EXTREMAL_FTILDE2 = 2,
  ABETA_EXTREMAL_FTILDE3 = 3,
} AbetaExtremal;

typedef enum AbetaFunctional {
  /**
   * `a_n a_{n+2} - mu a_{n+1}^2`
   */
  ABETA_FUNCTIONAL_HANKEL = 0,
  /**
   * `a_n^2 - a_{n+1}^2`
   */
  ABETA_FUNCTIONAL_T2N = 1,
  /**
   * `1 - 2a_2^2 + 2a_2^2 a_3 - a_3^2`
   */
  ABETA_FUNCTIONAL_T3_TOEPLITZ = 2,
  /**
   * Hermitian `T_{3,1}`, real
   */
  ABETA_FUNCTIONAL_T31_HERMITIAN = 3,
  /**
   * `a_n a_m - a_{n+m-1}`
   */
  ABETA_FUNCTIONAL_ZALCMAN = 4,
  /**
   * `a_{n+1}^N - a_n^N`
   */
  ABETA_FUNCTIONAL_COEFF_DIFF = 5,
} AbetaFunctional;

typedef enum AbetaTheoremKind {
  ABETA_THEOREM_KIND_COEFF = 0,
  ABETA_THEOREM_KIND_HANKEL_MU = 1,
  ABETA_THEOREM_KIND_H2 = 2,
  ABETA_THEOREM_KIND_ZALCMAN23 = 3,
  ABETA_THEOREM_KIND_TOEPLITZ2 = 4,
  ABETA_THEOREM_KIND_TOEPLITZ3 = 5,
  ABETA_THEOREM_KIND_T31_UPPER = 6,
  ABETA_THEOREM_KIND_T31_LOWER = 7,
  ABETA_THEOREM_KIND_COEFF_DIFF = 8,
  ABETA_THEOREM_KIND_GROWTH_LOWER = 9,
  ABETA_THEOREM_KIND_GROWTH_UPPER = 10,
  ABETA_THEOREM_KIND_RE_FZ_LOWER = 11,
  ABETA_THEOREM_KIND_RE_FZ_UPPER = 12,
} AbetaTheoremKind;

typedef enum AbetaSharpness {
  ABETA_SHARPNESS_SHARP_CLAIMED = 0,
  ABETA_SHARPNESS_SHARP_VERIFIED = 1,
  ABETA_SHARPNESS_ATTAINMENT_OPEN = 2,
} AbetaSharpness;

/**
 * Opaque coefficient sequence `a_2..a_M`.
 */
typedef struct AbetaCoeffSeq AbetaCoeffSeq;

/**
 * Opaque atomic Herglotz measure.
 */
typedef struct AbetaMeasure AbetaMeasure;

/**
 * A theorem and its side parameters; fields a theorem does not use are ignored.
 */
typedef struct AbetaTheoremSpec {
  enum AbetaTheoremKind kind;
  size_t n;
  double mu;
  uint32_t power;
  double p;
  double r;
} AbetaTheoremSpec;

typedef struct AbetaRadius {
  double radius;
  double residual;
  double bracket_lo;
  double bracket_hi;
  size_t iterations;
} AbetaRadius;

typedef struct AbetaVerifyResult {
  double max_observed;
  double bound;
  double attainment_gap;
  size_t violations;
  enum AbetaSharpness sharp;
} AbetaVerifyResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *abeta_last_error_message(void);

/**
 * Builds a measure from `len` angles and weights (weights summing to 1).
 *
 * # Safety
 * `thetas` and `weights` must point to `len` readable doubles; `out` must be writable.
 */
enum AbetaStatus abeta_measure_new(const double *thetas,
                                   const double *weights,
                                   size_t len,
                                   struct AbetaMeasure **out);

/**
 * Samples a measure with `k` free atoms. With `constrain_p1` set, `p_1` is
 * forced to the real value `p1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum AbetaStatus abeta_measure_sample(uint64_t seed,
                                      size_t k,
                                      bool constrain_p1,
                                      double p1,
                                      struct AbetaMeasure **out);

/**
 * Measure generating one of the extremal functions.
 *
 * # Safety
 * `out` must be writable.
 */
enum AbetaStatus abeta_measure_extremal(enum AbetaExtremal id,
                                        double beta,
                                        struct AbetaMeasure **out);

/**
 * # Safety
 * `m` must be NULL or a handle from this library not yet freed.
 */
void abeta_measure_free(struct AbetaMeasure *m);

/**
 * Number of atoms in the measure.
 *
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum AbetaStatus abeta_measure_len(const struct AbetaMeasure *m, size_t *out);

/**
 * `f(z)` for the member of `A_beta` generated by `m`, `|z| < 1`.
 *
 * # Safety
 * `m` must be a live handle; `out_re` and `out_im` writable.
 */
enum AbetaStatus abeta_measure_eval_f(const struct AbetaMeasure *m,
                                      double beta,
                                      double z_re,
                                      double z_im,
                                      double *out_re,
                                      double *out_im);

/**
 * Coefficients `a_2..a_max_index` of the function generated by `m`.
 *
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum AbetaStatus abeta_coeffs_from_measure(const struct AbetaMeasure *m,
                                           double beta,
                                           size_t max_index,
                                           struct AbetaCoeffSeq **out);

/**
 * Coefficients `a_2..a_max_index` of an extremal function.
 *
 * # Safety
 * `out` must be writable.
 */
enum AbetaStatus abeta_coeffs_extremal(enum AbetaExtremal id,
                                       double beta,
                                       size_t max_index,
                                       struct AbetaCoeffSeq **out);

/**
 * # Safety
 * `s` must be NULL or a handle from this library not yet freed.
 */
void abeta_coeffs_free(struct AbetaCoeffSeq *s);

/**
 * Largest stored coefficient index.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum AbetaStatus abeta_coeffs_max_index(const struct AbetaCoeffSeq *s, size_t *out);

/**
 * `a_n`, with `a_1 = 1`.
 *
 * # Safety
 * `s` must be a live handle; `out_re` and `out_im` writable.
 */
enum AbetaStatus abeta_coeffs_get(const struct AbetaCoeffSeq *s,
                                  size_t n,
                                  double *out_re,
                                  double *out_im);

/**
 * Evaluates a coefficient functional. `n`, `m`, `mu` and `power` are read
 * only by the functionals that use them.
 *
 * # Safety
 * `s` must be a live handle; `out_re` and `out_im` writable.
 */
enum AbetaStatus abeta_functional(const struct AbetaCoeffSeq *s,
                                  enum AbetaFunctional kind,
                                  size_t n,
                                  size_t m,
                                  double mu,
                                  uint32_t power,
                                  double *out_re,
                                  double *out_im);

/**
 * Value of a bound at `beta` and its witness-checked sharpness.
 *
 * # Safety
 * `out_value` and `out_sharp` must be writable.
 */
enum AbetaStatus abeta_bound(struct AbetaTheoremSpec spec,
                             double beta,
                             double *out_value,
                             enum AbetaSharpness *out_sharp);

/**
 * `ftilde(z)` for `|z| <= 1`, `z != 1`, with an absolute error bound.
 *
 * # Safety
 * The out pointers must be writable.
 */
enum AbetaStatus abeta_ftilde(double beta,
                              double z_re,
                              double z_im,
                              double tol,
                              double *out_re,
                              double *out_im,
                              double *out_err);

/**
 * Bohr radius for `0 <= beta < 1`, `m >= 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum AbetaStatus abeta_bohr_radius(double beta, uint32_t m, struct AbetaRadius *out);

/**
 * Bohr-Rogosinski radius for `0 <= beta < 1`, `m >= 1`, `1 <= tail <= 64`.
 *
 * # Safety
 * `out` must be writable.
 */
enum AbetaStatus abeta_rogosinski_radius(double beta,
                                         uint32_t m,
                                         size_t tail,
                                         struct AbetaRadius *out);

/**
 * Samples `n_samples` functions plus the extremal witnesses against a bound.
 *
 * # Safety
 * `out` must be writable.
 */
enum AbetaStatus abeta_verify_bound(struct AbetaTheoremSpec spec,
                                    double beta,
                                    size_t n_samples,
                                    uint64_t seed,
                                    struct AbetaVerifyResult *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABETA_H */
