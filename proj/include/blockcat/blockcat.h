#ifndef BLOCKCAT_BLOCKCAT_H
#define BLOCKCAT_BLOCKCAT_H

/*
 * C interface to the exact block-matrix category library.
 *
 * A bdk_problem holds a validated problem document (field, index set,
 * named objects, morphisms and kappa-matrices). Operations name their
 * inputs and return a JSON result owned by the caller (free it with
 * bdk_string_free):
 *
 *   { "text": "<human-readable report>", "problem": { ...reloadable document... }, ... }
 *
 * Every call returns BDK_OK, BDK_NO (the property asked about does not
 * hold; the result is still filled in) or an error status. The message of
 * the last error on the calling thread is available from bdk_last_error.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BDK_BUILDING_LIBRARY)
#define BDK_API __attribute__((visibility("default")))
#else
#define BDK_API
#endif

typedef enum bdk_status {
  BDK_OK = 0,
  BDK_NO = 1,
  BDK_E_INVALID_ARGUMENT = 2,
  BDK_E_MIXED_FIELDS,
  BDK_E_DIVISION_BY_ZERO,
  BDK_E_DIMENSION_MISMATCH,
  BDK_E_NOT_SQUARE,
  BDK_E_INVALID_LABEL,
  BDK_E_DUPLICATE_LABEL,
  BDK_E_UNKNOWN_LABEL_IN_PAIR,
  BDK_E_OVERLAPPING_PAIRS,
  BDK_E_UNKNOWN_LABEL,
  BDK_E_MIXED_INDEX_SETS,
  BDK_E_SHAPE_VIOLATION,
  BDK_E_INVOLUTION_DIM_VIOLATION,
  BDK_E_SQUARE_NOT_ZERO,
  BDK_E_INTERTWINING_VIOLATION,
  BDK_E_TRIANGULARITY_VIOLATION,
  BDK_E_SIGMA_DIAGONAL_VIOLATION,
  BDK_E_SOURCE_TARGET_MISMATCH,
  BDK_E_INVALID_WITNESS,
  BDK_E_DEGENERATE,
  BDK_E_SQUARE_FAILS,
  BDK_E_NOT_ISO,
  BDK_E_SYNTAX,
  BDK_E_VALIDATION,
  BDK_E_NOT_FOUND,
  BDK_E_IO,
  BDK_E_INTERNAL
} bdk_status;

typedef struct bdk_problem bdk_problem;

typedef struct bdk_fuzz_config {
  uint64_t seed;
  const char* field; /* "q" or "gfP", e.g. "gf5" */
  uint32_t max_indices;
  uint32_t max_dim;
  uint32_t trials;
  int oracle;
} bdk_fuzz_config;

BDK_API const char* bdk_last_error(void);
BDK_API const char* bdk_status_name(bdk_status status);
BDK_API void bdk_string_free(char* s);

BDK_API bdk_status bdk_problem_load_file(const char* path, bdk_problem** out);
BDK_API bdk_status bdk_problem_load_json(const char* text, bdk_problem** out);
BDK_API void bdk_problem_free(bdk_problem* p);
BDK_API bdk_status bdk_problem_to_json(const bdk_problem* p, char** out);

/* Names and sizes of everything in the problem. */
BDK_API bdk_status bdk_check(const bdk_problem* p, char** out);

BDK_API bdk_status bdk_cone(const bdk_problem* p, const char* t, char** out);
BDK_API bdk_status bdk_shift(const bdk_problem* p, const char* b, char** out);
BDK_API bdk_status bdk_direct_sum(const bdk_problem* p, const char* b, const char* c, char** out);
BDK_API bdk_status bdk_standard_triangle(const bdk_problem* p, const char* t, char** out);

/* BDK_NO when S and T are not homotopic. */
BDK_API bdk_status bdk_kappa_equiv(const bdk_problem* p, const char* s, const char* t, char** out);
/* Result carries "dim_s" and, with quotient != 0, "dim_kappa". */
BDK_API bdk_status bdk_hom(const bdk_problem* p, const char* b, const char* c, int quotient, int basis, char** out);
/* BDK_NO when T is not invertible up to homotopy. */
BDK_API bdk_status bdk_kappa_iso(const bdk_problem* p, const char* t, char** out);

/* BDK_NO when some diagram cell fails. */
BDK_API bdk_status bdk_rotate(const bdk_problem* p, const char* t, char** out);
BDK_API bdk_status bdk_fill(const bdk_problem* p, const char* f, const char* g, const char* t, const char* t2,
                            const char* k, char** out);
BDK_API bdk_status bdk_octahedron(const bdk_problem* p, const char* s, const char* t, char** out);

/* BDK_NO when any axiom trial fails. text gets the line report, json the summary. */
BDK_API bdk_status bdk_fuzz(const bdk_fuzz_config* cfg, char** text, char** json);

#ifdef __cplusplus
}
#endif

#endif
