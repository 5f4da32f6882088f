#ifndef PARTITION_LAB_H
#define PARTITION_LAB_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes.
typedef enum PlStatus {
  PL_STATUS_OK = 0,
  PL_STATUS_NULL_POINTER = 1,
  PL_STATUS_INVALID_ARGUMENT = 2,
  PL_STATUS_INVALID_MATRIX = 3,
  PL_STATUS_OVERFLOW = 4,
  PL_STATUS_BUFFER_TOO_SMALL = 5,
  PL_STATUS_MISMATCH = 6,
  PL_STATUS_PANIC = 7,
} PlStatus;

// Opaque two-line matrix.
typedef struct PlMatrix PlMatrix;

// Opaque list of canonical solution tuples.
typedef struct PlSolutions PlSolutions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the last error message of this thread into `buf` (NUL-terminated,
// truncated to `cap`). Returns the full message length without the NUL.
//
// # Safety
// `buf` must be null or valid for `cap` bytes.
size_t pl_last_error_message(char *buf, size_t cap);

// `p(n)` from the pentagonal-number recurrence.
//
// # Safety
// `out` must be a valid pointer.
enum PlStatus pl_count_partitions(uint64_t n, uint64_t *out);

// Builds and validates a matrix from two rows of `columns` entries.
//
// # Safety
// `top` and `bottom` must point to `columns` values; `out` must be valid.
enum PlStatus pl_matrix_new(const uint64_t *top,
                            const uint64_t *bottom,
                            size_t columns,
                            struct PlMatrix **out);

// Parses `{"top":[..],"bottom":[..]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid.
enum PlStatus pl_matrix_from_json(const char *json, struct PlMatrix **out);

// The matrix of a weakly decreasing partition.
//
// # Safety
// `parts` must point to `len` values; `out` must be valid.
enum PlStatus pl_matrix_from_partition(const uint64_t *parts, size_t len, struct PlMatrix **out);

// The `M0` matrix of `(l_2, l_2, l_3, ...)` for a partition with at least two parts.
//
// # Safety
// `parts` must point to `len` values; `out` must be valid.
enum PlStatus pl_matrix_project_to_m0(const uint64_t *parts, size_t len, struct PlMatrix **out);

// # Safety
// `matrix` must be null or a handle from this library that was not freed.
void pl_matrix_free(struct PlMatrix *matrix);

// Number of columns, or 0 for a null handle.
//
// # Safety
// `matrix` must be null or a live handle.
size_t pl_matrix_columns(const struct PlMatrix *matrix);

// Copies both rows into `top` and `bottom`, each of capacity `cap`.
//
// # Safety
// `matrix` must be a live handle; buffers must hold `cap` values.
enum PlStatus pl_matrix_rows(const struct PlMatrix *matrix,
                             uint64_t *top,
                             uint64_t *bottom,
                             size_t cap,
                             size_t *len_out);

// Column sums of the matrix.
//
// # Safety
// `matrix` must be a live handle; `parts` must hold `cap` values.
enum PlStatus pl_matrix_to_partition(const struct PlMatrix *matrix,
                                     uint64_t *parts,
                                     size_t cap,
                                     size_t *len_out);

// Entry sum `l(M)`.
//
// # Safety
// `matrix` and `out` must be valid.
enum PlStatus pl_matrix_ell(const struct PlMatrix *matrix, uint64_t *out);

// Hook sizes, largest first.
//
// # Safety
// `matrix` must be a live handle; `parts` must hold `cap` values.
enum PlStatus pl_matrix_hooks(const struct PlMatrix *matrix,
                              uint64_t *parts,
                              size_t cap,
                              size_t *len_out);

// Path weight `P(M)`.
//
// # Safety
// `matrix` and `out` must be valid.
enum PlStatus pl_matrix_weight(const struct PlMatrix *matrix, uint64_t *out);

// `f(m)`.
//
// # Safety
// `out` must be valid.
enum PlStatus pl_frequency(uint64_t m, uint64_t *out);

// `|B(m, n)|`.
//
// # Safety
// `out` must be valid.
enum PlStatus pl_b_count(uint64_t m, uint64_t n, uint64_t *out);

// Evaluates both sides of the partition identity for `n`. Returns
// `PL_STATUS_MISMATCH` if they differ; both outputs are written either way.
//
// # Safety
// Both output pointers must be valid.
enum PlStatus pl_verify(uint64_t n, uint64_t *p_oracle, uint64_t *p_theorem);

// Canonical solutions for `m`; with `n > 0` only those with `b + c_1 <= n`.
//
// # Safety
// `out` must be valid.
enum PlStatus pl_solutions_new(uint64_t m, uint64_t n, struct PlSolutions **out);

// # Safety
// `solutions` must be null or a live handle.
size_t pl_solutions_len(const struct PlSolutions *solutions);

// Reads solution `index`: its `(a, b)` pair and the zero-padded tuple.
//
// # Safety
// `solutions` must be a live handle; all pointers must be valid; `tuple`
// must hold `cap` values.
enum PlStatus pl_solutions_get(const struct PlSolutions *solutions,
                               size_t index,
                               uint64_t *a,
                               uint64_t *b,
                               uint64_t *tuple,
                               size_t cap,
                               size_t *len_out);

// # Safety
// `solutions` must be null or a handle that was not freed.
void pl_solutions_free(struct PlSolutions *solutions);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARTITION_LAB_H */
