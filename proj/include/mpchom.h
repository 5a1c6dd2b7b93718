/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C API of the mpchom shared library.
 *
 * Exact-arithmetic verification of the homogeneous-weight distance bound
 * for matrix product codes over finite principal ideal rings.
 *
 * Conventions:
 *   - every function returns an mpchom_status; MPCHOM_OK is 0
 *   - objects are opaque handles released with the matching _free function
 *   - report output parameters receive a NUL-terminated JSON (or CSV)
 *     document allocated by the library; release with mpchom_string_free
 *   - on failure, mpchom_last_error() returns a thread-local message that
 *     stays valid until the next failing call on the same thread
 */
#ifndef MPCHOM_H
#define MPCHOM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef MPCHOM_API
#define MPCHOM_API __attribute__((visibility("default")))
#endif

typedef enum mpchom_status {
  MPCHOM_OK = 0,
  MPCHOM_ERR_PARSE = 1,
  MPCHOM_ERR_INVALID_ARGUMENT = 2,
  MPCHOM_ERR_COMPOSITE_CHARACTERISTIC = 3,
  MPCHOM_ERR_REDUCIBLE_POLYNOMIAL = 4,
  MPCHOM_ERR_UNSUPPORTED_GALOIS_RING = 5,
  MPCHOM_ERR_MISSING_POLYNOMIAL = 6,
  MPCHOM_ERR_SPEC_MISMATCH = 7,
  MPCHOM_ERR_EMPTY_PRODUCT = 8,
  MPCHOM_ERR_MODULUS_TOO_SMALL = 9,
  MPCHOM_ERR_MODULUS_TOO_LARGE = 10,
  MPCHOM_ERR_NOT_A_ZN_RING = 11,
  MPCHOM_ERR_OUT_OF_RANGE = 12,
  MPCHOM_ERR_LENGTH_MISMATCH = 13,
  MPCHOM_ERR_NOT_SQUARE = 14,
  MPCHOM_ERR_TOO_LARGE = 15,
  MPCHOM_ERR_WIDE_MATRIX = 16,
  MPCHOM_ERR_BAD_INDEX = 17,
  MPCHOM_ERR_SINGULAR_MATRIX = 18,
  MPCHOM_ERR_INFEASIBLE_SHAPE = 19,
  MPCHOM_ERR_ENUMERATION_TOO_LARGE = 20,
  MPCHOM_ERR_NONLINEAR_CODE = 21,
  MPCHOM_ERR_DEGENERATE_CODE = 22,
  MPCHOM_ERR_SHAPE_MISMATCH = 23,
  MPCHOM_ERR_NOT_NSC = 24,
  MPCHOM_ERR_HYPOTHESIS_SATISFIED = 25,
  MPCHOM_ERR_CONDITION_NOT_MET = 26,
  MPCHOM_ERR_INTERNAL = 27
} mpchom_status;

typedef struct mpchom_ring mpchom_ring;
typedef struct mpchom_matrix mpchom_matrix;
typedef struct mpchom_codes mpchom_codes;

MPCHOM_API const char* mpchom_version(void);
MPCHOM_API const char* mpchom_status_name(int status);
MPCHOM_API const char* mpchom_last_error(void);
MPCHOM_API void mpchom_string_free(char* text);

/*
 * Ring grammar: "Z<N>" (CRT-decomposed Z_N), "F<q>" (Galois field), or an
 * explicit product like "Z4 x Z9 x F4"; case-insensitive.
 */
MPCHOM_API int mpchom_ring_parse(const char* text, mpchom_ring** out);
MPCHOM_API void mpchom_ring_free(mpchom_ring* ring);
MPCHOM_API int mpchom_ring_describe(const mpchom_ring* ring, char** json_out);
/* Full homogeneous weight table with exact values, sum, and range. */
MPCHOM_API int mpchom_ring_weight_table(const mpchom_ring* ring,
                                        char** json_out);
/* q_2 > q_1 + 1 proviso; ok_out is 0/1, reason_out optional. */
MPCHOM_API int mpchom_ring_hypothesis(const mpchom_ring* ring, int* ok_out,
                                      char** reason_out);

/* Matrices are JSON arrays of rows; entries are integers for Z_N rings and
 * per-factor arrays otherwise. */
MPCHOM_API int mpchom_matrix_parse(const mpchom_ring* ring, const char* json,
                                   mpchom_matrix** out);
MPCHOM_API void mpchom_matrix_free(mpchom_matrix* matrix);
MPCHOM_API int mpchom_matrix_to_json(const mpchom_matrix* matrix,
                                     char** json_out);
/* nsc_out is 0/1; detail_json_out (optional) carries the first failing
 * minor when the matrix is not NSC. */
MPCHOM_API int mpchom_matrix_is_nsc(const mpchom_matrix* matrix, int* nsc_out,
                                    char** detail_json_out);
/* Deterministic NSC construction; fails with
 * MPCHOM_ERR_INFEASIBLE_SHAPE when m > 1 and cols > min q_t. */
MPCHOM_API int mpchom_build_nsc(const mpchom_ring* ring, int rows, int cols,
                                mpchom_matrix** out);

/* A codes document is a JSON array of
 *   {"length": n, "kind": "linear"|"explicit", "generators"|"words": [...]}.
 */
MPCHOM_API int mpchom_codes_parse(const mpchom_ring* ring, const char* json,
                                  mpchom_codes** out);
MPCHOM_API void mpchom_codes_free(mpchom_codes* codes);
MPCHOM_API int mpchom_codes_count(const mpchom_codes* codes, int* count_out);

/* Distance-bound verification of [C_1,...,C_m]A. bound_holds_out (optional)
 * is 0/1. The report records d_h, the bound, the hypothesis, the equality
 * conditions C1/C2, and a minimizing witness pair. */
MPCHOM_API int mpchom_verify_bound(const mpchom_codes* codes,
                                     const mpchom_matrix* matrix,
                                     char** report_json_out,
                                     int* bound_holds_out);

/* Dual-side verification for square NSC matrices over linear codes;
 * all_ok_out (optional) is 1 when every checked identity held. */
MPCHOM_API int mpchom_verify_dual(const mpchom_codes* codes,
                                  const mpchom_matrix* matrix,
                                  char** report_json_out, int* all_ok_out);

/* Sharpness construction for rings with q_2 == q_1 + 1 (e.g. Z_6); fails
 * with MPCHOM_ERR_HYPOTHESIS_SATISFIED otherwise. The reported instance
 * always violates the bound strictly. */
MPCHOM_API int mpchom_counterexample(const mpchom_ring* ring,
                                     char** report_json_out);

/* Exhaustive minimum Hamming weight of the span of the first k rows of an
 * NSC matrix (equals cols - k + 1). */
MPCHOM_API int mpchom_rowspan_hamming(const mpchom_matrix* matrix, int k,
                                      char** report_json_out);

/* Seeded randomized campaign. config_json fields (all optional except ring):
 *   ring, trials, seed, m, l, n, code_kinds, max_product, max_dual,
 *   check_dual, check_rowspan, check_partial, include_trials, format, out.
 * The report (JSON or CSV per "format") is byte-identical for identical
 * configs. violations_out (optional) receives the bound-violation count. */
MPCHOM_API int mpchom_campaign_run(const char* config_json, char** report_out,
                                   long long* violations_out);

#ifdef __cplusplus
}
#endif

#endif /* MPCHOM_H */
