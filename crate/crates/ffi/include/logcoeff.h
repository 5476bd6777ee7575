#ifndef LOGCOEFF_H
#define LOGCOEFF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum LcStatus {
  LC_STATUS_OK = 0,
  LC_STATUS_NULL_POINTER = 1,
  LC_STATUS_INVALID_ARGUMENT = 2,
  LC_STATUS_PARSE = 3,
  LC_STATUS_DOMAIN = 4,
  LC_STATUS_INSUFFICIENT_PRECISION = 5,
  /**
   * The class's parameters fall outside the regions its bound is stated for.
   */
  LC_STATUS_UNCOVERED_REGION = 6,
  LC_STATUS_OUT_OF_RANGE = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  LC_STATUS_INTERNAL = 8,
} LcStatus;

/**
 * Prokhorov-Szynal regions; `LC_REGION_POINT21` is the point `(2, 1)`.
 */
typedef enum LcRegion {
  LC_REGION_D1 = 1,
  LC_REGION_D2 = 2,
  LC_REGION_D3 = 3,
  LC_REGION_D4 = 4,
  LC_REGION_D5 = 5,
  LC_REGION_D6 = 6,
  LC_REGION_D7 = 7,
  LC_REGION_D8 = 8,
  LC_REGION_D9 = 9,
  LC_REGION_D10 = 10,
  LC_REGION_D11 = 11,
  LC_REGION_D12 = 12,
  LC_REGION_POINT21 = 13,
} LcRegion;

/**
 * Opaque class handle.
 */
typedef struct LcClass LcClass;

/**
 * Opaque truncated power series handle.
 */
typedef struct LcSeries LcSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static string.
 */
const char *lc_version(void);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next library call on the same thread.
 */
const char *lc_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void lc_string_free(char *s);

/**
 * Parses `fc=<c>`, `janowski=<A>,<B>` or `robertson=<alpha>`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum LcStatus lc_class_parse(const char *text, struct LcClass **out);

/**
 * # Safety
 * `class` must come from [`lc_class_parse`] and not have been freed.
 */
void lc_class_free(struct LcClass *class_);

/**
 * Coefficients `psi_0..psi_order` of the class's best dominant, from the
 * recurrence, or from the closed form when `closed` is nonzero.
 *
 * # Safety
 * `class` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_psi_series(const struct LcClass *class_,
                            size_t order,
                            uint32_t bits,
                            int closed,
                            struct LcSeries **out);

/**
 * The class's extremal function `z + a_2 z^2 + ...` to `order`.
 *
 * # Safety
 * `class` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_extremal_series(const struct LcClass *class_,
                                 size_t order,
                                 uint32_t bits,
                                 struct LcSeries **out);

/**
 * Logarithmic coefficients of a normalized series `f`: the result has
 * `gamma_n` at index `n` for `1 <= n <= count` and zero at index 0.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_log_coeffs(const struct LcSeries *f, size_t count, struct LcSeries **out);

/**
 * Number of stored coefficients (`order + 1`); 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t lc_series_len(const struct LcSeries *s);

/**
 * Coefficient `n` rounded to doubles.
 *
 * # Safety
 * `s` must be a live handle; `re` and `im` must be writable.
 */
enum LcStatus lc_series_coeff(const struct LcSeries *s, size_t n, double *re, double *im);

/**
 * The series as a JSON array of `[re, im]` decimal strings at full
 * precision; free the result with [`lc_string_free`].
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_series_json(const struct LcSeries *s, char **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void lc_series_free(struct LcSeries *s);

/**
 * Region of `(mu, nu)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_ps_classify(double mu, double nu, enum LcRegion *out);

/**
 * Sharp bound of `|c_3 + mu c_1 c_2 + nu c_1^3|` over Schwarz functions.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_ps_bound(double mu, double nu, double *out);

/**
 * Bounds of `|gamma_1|, |gamma_2|, |gamma_3|` over the class, written to
 * `out[0..3]`. Janowski parameters outside the covered regions give
 * `LC_STATUS_UNCOVERED_REGION`.
 *
 * # Safety
 * `class` must be a live handle; `out` must point to 3 writable doubles.
 */
enum LcStatus lc_gamma_bounds(const struct LcClass *class_, uint32_t bits, double *out);

/**
 * `Re Psi` at `e^{i (2 - eps) pi}` for the `F(c)` dominant; `c` and `eps` are
 * decimal strings so tiny offsets survive exactly. `bits_used` (may be NULL)
 * receives the precision at which the result was stable.
 *
 * # Safety
 * `c` and `eps` must be NUL-terminated strings; `out` must be writable.
 */
enum LcStatus lc_re_psi_boundary(const char *c,
                                 const char *eps,
                                 uint32_t bits,
                                 double *out,
                                 uint32_t *bits_used);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOGCOEFF_H */
