#ifndef HARMONIA_H
#define HARMONIA_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HmStatus {
  HM_STATUS_OK = 0,
  HM_STATUS_NULL_POINTER = 1,
  /**
   * Malformed input: unknown type, wrong length, bad word, index out of range.
   */
  HM_STATUS_INVALID_INPUT = 2,
  /**
   * Well-formed input the library declines: non-dominant weight, budget,
   * unsupported type for the operation.
   */
  HM_STATUS_REJECTED = 3,
  HM_STATUS_BUFFER_TOO_SMALL = 4,
  HM_STATUS_PANIC = 5,
} HmStatus;

typedef struct HmCone HmCone;

typedef struct HmDatum HmDatum;

typedef struct HmPoly HmPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *hm_version(void);

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *hm_last_error_message(void);

/**
 * # Safety
 * `label` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HmStatus hm_datum_new(const char *label, size_t rank, struct HmDatum **out);

/**
 * # Safety
 * `datum` must come from [`hm_datum_new`] and not be used afterwards.
 */
void hm_datum_free(struct HmDatum *datum);

/**
 * Rank, or 0 for a null handle.
 *
 * # Safety
 * `datum` must be null or a live handle.
 */
size_t hm_datum_rank(const struct HmDatum *datum);

/**
 * # Safety
 * `datum` must be null or a live handle.
 */
size_t hm_datum_num_positive_roots(const struct HmDatum *datum);

/**
 * `K_{λμ}(q)` for weights given by `len` fundamental coordinates each.
 *
 * # Safety
 * `lambda` and `mu` must point to `len` values; `out` must be valid.
 */
enum HmStatus hm_kostka(const struct HmDatum *datum,
                        const int64_t *lambda,
                        const int64_t *mu,
                        size_t len,
                        struct HmPoly **out);

/**
 * # Safety
 * `poly` must come from this library and not be used afterwards.
 */
void hm_poly_free(struct HmPoly *poly);

/**
 * # Safety
 * `poly` must be null or a live handle.
 */
size_t hm_poly_num_terms(const struct HmPoly *poly);

/**
 * The `index`-th non-zero term in increasing exponent order.
 *
 * # Safety
 * `poly` must be a live handle; `exponent` and `coefficient` valid.
 */
enum HmStatus hm_poly_term(const struct HmPoly *poly,
                           size_t index,
                           uint32_t *exponent,
                           int64_t *coefficient);

/**
 * # Safety
 * `poly` must be a live handle and `out` valid.
 */
enum HmStatus hm_poly_eval(const struct HmPoly *poly, int64_t q, int64_t *out);

/**
 * `dim V(λ)_μ`.
 *
 * # Safety
 * `lambda` and `mu` must point to `len` values; `out` must be valid.
 */
enum HmStatus hm_weight_multiplicity(const struct HmDatum *datum,
                                     const int64_t *lambda,
                                     const int64_t *mu,
                                     size_t len,
                                     uint64_t *out);

/**
 * Generalized exponents of `λ` in increasing order. `out_len` receives the
 * number of exponents; if it exceeds `capacity` nothing is written to
 * `buffer` and [`HmStatus::BufferTooSmall`] is returned.
 *
 * # Safety
 * `lambda` must point to `len` values, `buffer` to `capacity` slots.
 */
enum HmStatus hm_generalized_exponents(const struct HmDatum *datum,
                                       const int64_t *lambda,
                                       size_t len,
                                       uint32_t *buffer,
                                       size_t capacity,
                                       size_t *out_len);

/**
 * The harmonic cone on an explicit reduced word of `nletters` 1-based
 * letters, or on the default word when `nletters` is 0 (the standard
 * word in type A).
 *
 * # Safety
 * `letters` must point to `nletters` values; `out` must be valid.
 */
enum HmStatus hm_cone_new(const struct HmDatum *datum,
                          const size_t *letters,
                          size_t nletters,
                          struct HmCone **out);

/**
 * # Safety
 * `cone` must come from [`hm_cone_new`] and not be used afterwards.
 */
void hm_cone_free(struct HmCone *cone);

/**
 * Number of Lusztig coordinates, or 0 for a null handle.
 *
 * # Safety
 * `cone` must be null or a live handle.
 */
size_t hm_cone_word_len(const struct HmCone *cone);

/**
 * # Safety
 * `psi` must point to `len` values; `out` must be valid.
 */
enum HmStatus hm_cone_contains(const struct HmCone *cone,
                               const int64_t *psi,
                               size_t len,
                               bool *out);

/**
 * Determinant of the leading `s × s` block of the rank-`n` centre matrix.
 *
 * # Safety
 * `out` must be valid.
 */
enum HmStatus hm_center_matrix_det(size_t n, size_t s, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HARMONIA_H */
