/* C interface for the hirzebruch library. */

#ifndef HIRZEBRUCH_H
#define HIRZEBRUCH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum HrzStatus {
  HRZ_STATUS_OK = 0,
  HRZ_STATUS_NULL_POINTER = 1,
  HRZ_STATUS_INVALID_ARGUMENT = 2,
  HRZ_STATUS_PARITY_VIOLATION = 3,
  HRZ_STATUS_OVERFLOW = 4,
  HRZ_STATUS_NOT_EINSTEIN = 5,
  HRZ_STATUS_PROJECTION_FAILED = 6,
  HRZ_STATUS_BUFFER_TOO_SMALL = 7,
  HRZ_STATUS_INTERNAL = 8,
} HrzStatus;

// Characteristic series selector.
typedef enum HrzGenusKind {
  HRZ_GENUS_KIND_TODD = 0,
  HRZ_GENUS_KIND_A_HAT = 1,
  HRZ_GENUS_KIND_L = 2,
} HrzGenusKind;

// Opaque Kähler curvature tensor at a point.
typedef struct HrzCurvature HrzCurvature;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code (never freed by the caller).
const char *hrz_status_message(enum HrzStatus status);

// Frees a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must have been returned by a `hrz_*` function and not freed before.
void hrz_string_free(char *s);

// χ(M, 𝒪(s)) for the n-dimensional ring with `c₁(M) = λ·h`, written to
// `out` when it fits in an `i64` (`Overflow` otherwise). `n` in `1..=64`.
//
// # Safety
// `out` must be valid for writing one `i64`.
enum HrzStatus hrz_chi_i64(uint32_t n, int64_t lambda, int64_t s, int64_t *out);

// χ(M, 𝒪(s)) as a decimal string of arbitrary precision, or NULL on
// invalid arguments. Free with [`hrz_string_free`].
char *hrz_chi_string(uint32_t n, int64_t lambda, int64_t s);

// Integer classification of `c₁ = λ·h`: writes the solutions `s` of
// `(s+1)⋯(s+n) = n!` and the matching `λ = n+1+2s`, plus whether the
// search window was certified exhaustive.
//
// `capacity` is the element count of both buffers; two is always enough.
// On `BufferTooSmall`, `out_len` holds the required count.
//
// # Safety
// `out_s` and `out_lambda` must be valid for `capacity` writes each;
// `out_len` and `out_certified` must be valid for one write each.
enum HrzStatus hrz_classify(uint32_t n,
                            int64_t *out_s,
                            int64_t *out_lambda,
                            uintptr_t capacity,
                            uintptr_t *out_len,
                            bool *out_certified);

// Coefficient of the chosen characteristic series at `degree` (in its root
// variable), as a rational string like `-1/24`. NULL on invalid arguments.
// Free with [`hrz_string_free`].
char *hrz_genus_coefficient_string(enum HrzGenusKind kind, uint32_t degree, uint32_t order);

// `∫ c₁(M̃)ⁿ` for the blowup of a point on an n-fold with `c₁ = 0`,
// `b₂ = 0`. `n` in `2..=32`.
//
// # Safety
// `out` must be valid for writing one `i64`.
enum HrzStatus hrz_blowup_c1_top(uint32_t n, int64_t *out);

// Checks `x/(1-e^{-x}) = e^{x/2}·(x/2)/sinh(x/2)` to the given order.
//
// # Safety
// `out` must be valid for writing one `bool`.
enum HrzStatus hrz_todd_ahat_identity_check(uint32_t order, bool *out);

// Runs the verification suite and returns the JSON report. NULL on invalid
// configuration. Free with [`hrz_string_free`].
char *hrz_verify_json(uintptr_t order,
                      uintptr_t nmax,
                      int64_t smax,
                      uintptr_t trials,
                      uint64_t seed,
                      double tolerance);

// A random Kähler-symmetric curvature tensor, deterministic in `seed`.
// `n` in `2..=16`.
//
// # Safety
// `out` must be valid for writing one pointer.
enum HrzStatus hrz_curvature_random(uint32_t n, uint64_t seed, struct HrzCurvature **out);

// The constant-holomorphic-sectional-curvature model tensor
// `R = c(δ⊗δ + δ⊗δ)`, which is Einstein with `λ = c(n+1)`.
//
// # Safety
// `out` must be valid for writing one pointer.
enum HrzStatus hrz_curvature_model(uint32_t n, double c, struct HrzCurvature **out);

// Projects the tensor to an Einstein one with constant `lambda`; the result
// is a new handle. The postcondition `max |Ric - λ·Id| ≤ 1e-10` is enforced.
//
// # Safety
// `handle` must be a live handle; `out` valid for writing one pointer.
enum HrzStatus hrz_curvature_make_einstein(const struct HrzCurvature *handle,
                                           double lambda,
                                           struct HrzCurvature **out);

// Releases a curvature handle. NULL is ignored.
//
// # Safety
// `handle` must have been returned by this library and not freed before.
void hrz_curvature_free(struct HrzCurvature *handle);

// Complex dimension of the tensor.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_dim(const struct HrzCurvature *handle, uint32_t *out);

// Scalar curvature `R = Σ R_{iī}`.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_scalar(const struct HrzCurvature *handle, double *out);

// `|Rm|²`.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_norm_rm_sq(const struct HrzCurvature *handle, double *out);

// `|Ric|²`.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_norm_ric_sq(const struct HrzCurvature *handle, double *out);

// `max |Ric - λ·Id|`.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_ricci_deviation(const struct HrzCurvature *handle,
                                             double lambda,
                                             double *out);

// `|Rm⁰|²`: squared norm after subtracting the constant-curvature model.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_rm0_norm_sq(const struct HrzCurvature *handle,
                                         double lambda,
                                         double *out);

// Residual of the contraction identity `Σ(R·R - R·R) = |Ric|² - |Rm|²`.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_contraction_residual(const struct HrzCurvature *handle, double *out);

// Pointwise Chern-gap density `|Rm⁰|²/(n(n-1)4π²)`; the tensor must be
// Einstein with the given `lambda` to 1e-8.
//
// # Safety
// `handle` must be a live handle; `out` valid for one write.
enum HrzStatus hrz_curvature_chern_gap(const struct HrzCurvature *handle,
                                       double lambda,
                                       double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HIRZEBRUCH_H */
