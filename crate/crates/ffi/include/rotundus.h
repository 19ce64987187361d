#ifndef ROTUNDUS_H
#define ROTUNDUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define ROTUNDUS_CONTINUANT_DETERMINANT 0

#define ROTUNDUS_CONTINUANT_EULER 1

#define ROTUNDUS_CONTINUANT_RECURRENCE 2

#define ROTUNDUS_METHOD_DEFINITION 0

#define ROTUNDUS_METHOD_CYCLIC_EULER 1

#define ROTUNDUS_METHOD_TRACE 2

#define ROTUNDUS_METHOD_PFAFFIAN 3

#define ROTUNDUS_DEDUP_NONE 0

#define ROTUNDUS_DEDUP_ROTATION 1

#define ROTUNDUS_DEDUP_ROTATION_REFLECTION 2

/**
 * Result code of every fallible call.
 */
typedef enum RotundusStatus {
  ROTUNDUS_STATUS_OK = 0,
  ROTUNDUS_STATUS_NULL_POINTER = 1,
  ROTUNDUS_STATUS_INVALID_ARGUMENT = 2,
  ROTUNDUS_STATUS_TOO_LARGE = 3,
  ROTUNDUS_STATUS_OUT_OF_RANGE = 4,
  ROTUNDUS_STATUS_INTERNAL = 5,
} RotundusStatus;

/**
 * Opaque multivariate polynomial with integer coefficients.
 */
typedef struct RotundusPoly RotundusPoly;

/**
 * Opaque list of polygon triangulations.
 */
typedef struct RotundusTriangulations RotundusTriangulations;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL.
 * Release with [`rotundus_string_free`].
 */
char *rotundus_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed once.
 */
void rotundus_string_free(char *s);

/**
 * `K_n(values)` as a decimal string.
 *
 * # Safety
 * `values` must point to `len` integers; `out` must be writable.
 */
enum RotundusStatus rotundus_continuant(const int64_t *values,
                                        size_t len,
                                        uint32_t method,
                                        char **out);

/**
 * `R_n(values)` as a decimal string.
 *
 * # Safety
 * `values` must point to `len` integers; `out` must be writable.
 */
enum RotundusStatus rotundus_rotundus(const int64_t *values,
                                      size_t len,
                                      uint32_t method,
                                      char **out);

/**
 * Symbolic `K_n` in the variables `a1..an`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RotundusStatus rotundus_poly_continuant(size_t n, uint32_t method, struct RotundusPoly **out);

/**
 * Symbolic `R_n` in the variables `a1..an`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RotundusStatus rotundus_poly_rotundus(size_t n, uint32_t method, struct RotundusPoly **out);

/**
 * # Safety
 * `poly` must be NULL or a live handle.
 */
size_t rotundus_poly_arity(const struct RotundusPoly *poly);

/**
 * Number of distinct monomials.
 *
 * # Safety
 * `poly` must be NULL or a live handle.
 */
size_t rotundus_poly_term_count(const struct RotundusPoly *poly);

/**
 * Text form, e.g. `a1*a2 - 2`.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be writable.
 */
enum RotundusStatus rotundus_poly_to_string(const struct RotundusPoly *poly, char **out);

/**
 * JSON form `{"arity":n,"terms":[{"c":"..","e":[..]}]}`.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be writable.
 */
enum RotundusStatus rotundus_poly_to_json(const struct RotundusPoly *poly, char **out);

/**
 * Value at an integer point of length `arity`, as a decimal string.
 *
 * # Safety
 * `poly` must be a live handle, `point` must hold `len` integers and
 * `out` must be writable.
 */
enum RotundusStatus rotundus_poly_eval(const struct RotundusPoly *poly,
                                       const int64_t *point,
                                       size_t len,
                                       char **out);

/**
 * # Safety
 * `poly` must be NULL or a handle from this library, freed once.
 */
void rotundus_poly_free(struct RotundusPoly *poly);

/**
 * All triangulations of the convex `n`-gon, or only the centrally
 * symmetric ones.
 *
 * # Safety
 * `out` must be writable.
 */
enum RotundusStatus rotundus_triangulations(size_t n,
                                            bool centrally_symmetric,
                                            struct RotundusTriangulations **out);

/**
 * # Safety
 * `list` must be NULL or a live handle.
 */
size_t rotundus_triangulations_len(const struct RotundusTriangulations *list);

/**
 * Copy the quiddity of triangulation `index` into `buf` (capacity
 * `capacity`); `written` receives its length `n`.
 *
 * # Safety
 * `list` must be a live handle, `buf` must have room for `capacity`
 * values and `written` must be writable.
 */
enum RotundusStatus rotundus_triangulations_quiddity(const struct RotundusTriangulations *list,
                                                     size_t index,
                                                     int64_t *buf,
                                                     size_t capacity,
                                                     size_t *written);

/**
 * JSON array of `{"n":..,"diagonals":[[i,j],..],"quiddity":[..]}`.
 *
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum RotundusStatus rotundus_triangulations_to_json(const struct RotundusTriangulations *list,
                                                    char **out);

/**
 * # Safety
 * `list` must be NULL or a handle from this library, freed once.
 */
void rotundus_triangulations_free(struct RotundusTriangulations *list);

/**
 * Positive solutions of `R_n = 0` with entries up to `max_entry`, as a
 * JSON array of integer arrays.
 *
 * # Safety
 * `out` must be writable.
 */
enum RotundusStatus rotundus_solve(size_t n,
                                   uint64_t max_entry,
                                   bool tp_only,
                                   uint32_t dedup,
                                   char **out);

/**
 * Run the seeded identity suite. `passed` receives the overall verdict
 * and `out` the JSON report.
 *
 * # Safety
 * `passed` and `out` must be writable.
 */
enum RotundusStatus rotundus_verify(size_t n_max, uint64_t seed, bool *passed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROTUNDUS_H */
