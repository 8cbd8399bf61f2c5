#ifndef LINPER_H
#define LINPER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes shared by every entry point.
typedef enum LinperStatus {
  LINPER_STATUS_OK = 0,
  LINPER_STATUS_NULL_POINTER = 1,
  LINPER_STATUS_INVALID_ARGUMENT = 2,
  LINPER_STATUS_SIZE_BOUND = 3,
  LINPER_STATUS_NON_MONIC = 4,
  LINPER_STATUS_INDEX_OUT_OF_RANGE = 5,
  LINPER_STATUS_BUFFER_TOO_SMALL = 6,
  LINPER_STATUS_PANIC = 7,
} LinperStatus;

// Opaque block Levi subgroup of `GL_N`.
typedef struct LinperLevi LinperLevi;

// Opaque rational function in `q`.
typedef struct LinperQRat LinperQRat;

// Opaque Schur decomposition.
typedef struct LinperSchurDecomposition LinperSchurDecomposition;

// Summary of a collided fiber mass.
typedef struct LinperMassSummary {
  int64_t degree;
  int64_t leading;
  uint64_t e_count;
  bool matches;
} LinperMassSummary;

// Sweep totals for the Levi inequality check.
typedef struct LinperLeviSweep {
  uint64_t cells;
  uint64_t mu_checked;
  uint64_t equalities;
  uint64_t failures;
  bool holds;
} LinperLeviSweep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null after a
// success. Valid until the next call into this library on the same thread.
const char *linper_last_error(void);

// Library version as a static nul-terminated string.
const char *linper_version(void);

// Frees a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed.
void linper_string_free(char *s);

// Decomposes `Sym^d(Λ²V) ⊗ Sym^{d'−d}V` for `dim V = 2n`.
enum LinperStatus linper_lemma242_decompose(size_t n,
                                            uint32_t d,
                                            uint32_t dp,
                                            struct LinperSchurDecomposition **out_handle);

// Number of distinct constituents.
//
// # Safety
// `h` must be a live handle or null.
size_t linper_schur_decomposition_len(const struct LinperSchurDecomposition *h);

// Copies constituent `index` into `parts` (capacity `cap`), writing its
// length and multiplicity. Returns `BUFFER_TOO_SMALL` with `len` set when
// `cap` is insufficient.
//
// # Safety
// `h` must be a live handle; `parts` must be valid for `cap` writes.
enum LinperStatus linper_schur_decomposition_entry(const struct LinperSchurDecomposition *h,
                                                   size_t index,
                                                   uint32_t *parts,
                                                   size_t cap,
                                                   size_t *len,
                                                   uint64_t *multiplicity);

// # Safety
// `h` must come from [`linper_lemma242_decompose`] and not have been freed.
void linper_schur_decomposition_free(struct LinperSchurDecomposition *h);

// Collided fiber mass for `0 ≤ d ≤ d'`.
enum LinperStatus linper_collided_fiber_mass(uint32_t d,
                                             uint32_t dp,
                                             struct LinperQRat **out_handle);

// # Safety
// `h` must be a live handle.
enum LinperStatus linper_qrat_summary(const struct LinperQRat *h,
                                      struct LinperMassSummary *summary);

// Evaluates the mass at an integer `q` as the reduced fraction `num/den`.
//
// # Safety
// `h` must be a live handle.
enum LinperStatus linper_qrat_eval(const struct LinperQRat *h,
                                   int64_t q,
                                   int64_t *num,
                                   int64_t *den);

// # Safety
// `h` must come from [`linper_collided_fiber_mass`] and not have been freed.
void linper_qrat_free(struct LinperQRat *h);

// Parses blocks written like `"1,3/2,4"`.
enum LinperStatus linper_levi_new(size_t n, const char *blocks, struct LinperLevi **out_handle);

// # Safety
// `h` must be a live handle.
enum LinperStatus linper_levi_is_antistandard(const struct LinperLevi *h, bool *result);

// All `λ` with entries in `[−lambda_bound, lambda_bound]` against all
// dominant `ν` with entries in `[−nu_bound, nu_bound]`.
//
// # Safety
// `h` must be a live handle.
enum LinperStatus linper_levi_sweep(const struct LinperLevi *h,
                                    int64_t lambda_bound,
                                    int64_t nu_bound,
                                    struct LinperLeviSweep *result);

// # Safety
// `h` must come from [`linper_levi_new`] and not have been freed.
void linper_levi_free(struct LinperLevi *h);

enum LinperStatus linper_verify_lemma242(size_t n, uint32_t d, uint32_t dp, bool *result);

enum LinperStatus linper_verify_induced_iso(size_t d, size_t dp, bool *result);

enum LinperStatus linper_k_orbits(size_t d, size_t dp, uint32_t q, uint64_t *result);

enum LinperStatus linper_verify_counts(size_t d, size_t dp, uint32_t q, bool *result);

// Exhaustive complete-flag count for the module of type `parts` over `F_q`.
//
// # Safety
// `parts` must be valid for `len` reads (may be null when `len == 0`).
enum LinperStatus linper_cfl_count_brute(const uint32_t *parts,
                                         size_t len,
                                         uint32_t q,
                                         uint64_t *result);

// Coefficients of the complete-flag count polynomial, ascending in `q`.
// Writes the number of coefficients to `len`; returns `BUFFER_TOO_SMALL`
// when `cap` is insufficient.
//
// # Safety
// `parts` must be valid for `parts_len` reads; `coeffs` for `cap` writes.
enum LinperStatus linper_cfl_count_poly(const uint32_t *parts,
                                        size_t parts_len,
                                        int64_t *coeffs,
                                        size_t cap,
                                        size_t *len);

// Runs every acceptance check at default bounds. Bit `i` of `passed_mask`
// is set when criterion `i + 1` passes; `report_json`, if non-null,
// receives a JSON report to be freed with [`linper_string_free`].
//
// # Safety
// `passed_mask` must be valid for writes; `report_json` must be null or
// valid for writes.
enum LinperStatus linper_selftest(uint32_t *passed_mask, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LINPER_H */
