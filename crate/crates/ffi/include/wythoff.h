#ifndef WYTHOFF_H
#define WYTHOFF_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define WYTHOFF_DIAGONAL SIZE_MAX



typedef enum WythoffStatus {
  WYTHOFF_STATUS_OK = 0,
  WYTHOFF_STATUS_NULL_POINTER = 1,
  WYTHOFF_STATUS_EMPTY_INPUT = 2,
  WYTHOFF_STATUS_DIMENSION_MISMATCH = 3,
  WYTHOFF_STATUS_UNSUPPORTED_DIMENSION = 4,
  WYTHOFF_STATUS_INVALID_SPEC = 5,
  WYTHOFF_STATUS_ILLEGAL_MOVE = 6,
  WYTHOFF_STATUS_NO_WINNING_MOVE = 7,
  WYTHOFF_STATUS_BUDGET_EXCEEDED = 8,
  WYTHOFF_STATUS_OUT_OF_RANGE = 9,
  WYTHOFF_STATUS_BUFFER_TOO_SMALL = 10,
  WYTHOFF_STATUS_PANIC = 11,
} WythoffStatus;

typedef struct WythoffGameSpec WythoffGameSpec;

typedef struct WythoffSponge WythoffSponge;

typedef struct WythoffVerdictTable WythoffVerdictTable;

/**
 * A move of the canonical game: `amount` tokens from heap `heap`
 * (zero-based), or from every heap when `heap` is `SIZE_MAX`.
 */
typedef struct WythoffCanonicalMove {
  size_t heap;
  uint64_t amount;
} WythoffCanonicalMove;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library from the same thread.
 */
const char *wythoff_last_error_message(void);

/**
 * Bitwise XOR of `len` heap sizes.
 *
 * # Safety
 * `heaps` must point to `len` values; `out` must be writable.
 */
enum WythoffStatus wythoff_nim_sum(const uint64_t *heaps, size_t len, uint64_t *out);

/**
 * Whether the position is a P-position of the canonical game (odd `len >= 3`).
 *
 * # Safety
 * `heaps` must point to `len` values; `out` must be writable.
 */
enum WythoffStatus wythoff_is_p_position(const uint64_t *heaps, size_t len, bool *out);

/**
 * The constructed single-heap winning move. Fails with
 * `WYTHOFF_STATUS_NO_WINNING_MOVE` on P-positions.
 *
 * # Safety
 * `heaps` must point to `len` values; `out` must be writable.
 */
enum WythoffStatus wythoff_winning_move(const uint64_t *heaps,
                                        size_t len,
                                        struct WythoffCanonicalMove *out);

/**
 * Every winning move of the canonical game. `*count` receives the number
 * of moves (at most `len + 1`); if it exceeds `capacity` nothing is written
 * to `moves` and `WYTHOFF_STATUS_BUFFER_TOO_SMALL` is returned.
 *
 * # Safety
 * `heaps` must point to `len` values, `moves` to `capacity` writable slots
 * (may be NULL when `capacity` is 0), and `count` must be writable.
 */
enum WythoffStatus wythoff_all_winning_moves(const uint64_t *heaps,
                                             size_t len,
                                             struct WythoffCanonicalMove *moves,
                                             size_t capacity,
                                             size_t *count);

/**
 * Canonical game on `n` heaps: the unit vectors, then the diagonal.
 *
 * # Safety
 * `out` must be writable. Free the handle with [`wythoff_spec_free`].
 */
enum WythoffStatus wythoff_spec_canonical(size_t n, struct WythoffGameSpec **out);

/**
 * Game with `count` move vectors of dimension `n`, stored row by row in
 * `vectors` (`count * n` values).
 *
 * # Safety
 * `vectors` must point to `count * n` values; `out` must be writable.
 */
enum WythoffStatus wythoff_spec_new(size_t n,
                                    const uint64_t *vectors,
                                    size_t count,
                                    struct WythoffGameSpec **out);

/**
 * # Safety
 * `spec` must be NULL or a handle from this library not yet freed.
 */
void wythoff_spec_free(struct WythoffGameSpec *spec);

/**
 * Retrograde analysis of `[0,bound)^n`. `max_cells = 0` selects the default
 * budget.
 *
 * # Safety
 * `spec` must be a live handle; `out` must be writable. Free the table with
 * [`wythoff_table_free`].
 */
enum WythoffStatus wythoff_solve_box(const struct WythoffGameSpec *spec,
                                     uint64_t bound,
                                     uint64_t max_cells,
                                     struct WythoffVerdictTable **out);

/**
 * # Safety
 * `table` must be a live handle, `heaps` must point to `len` values and
 * `out` must be writable.
 */
enum WythoffStatus wythoff_table_is_p(const struct WythoffVerdictTable *table,
                                      const uint64_t *heaps,
                                      size_t len,
                                      bool *out);

/**
 * Number of positions in the table, or 0 for NULL.
 *
 * # Safety
 * `table` must be NULL or a live handle.
 */
size_t wythoff_table_len(const struct WythoffVerdictTable *table);

/**
 * Number of P-positions in the table, or 0 for NULL.
 *
 * # Safety
 * `table` must be NULL or a live handle.
 */
size_t wythoff_table_p_count(const struct WythoffVerdictTable *table);

/**
 * # Safety
 * `table` must be NULL or a handle from this library not yet freed.
 */
void wythoff_table_free(struct WythoffVerdictTable *table);

/**
 * The sponge level `P_m^(n)`, points sorted lexicographically.
 * `max_cells = 0` selects the default budget.
 *
 * # Safety
 * `out` must be writable. Free the handle with [`wythoff_sponge_free`].
 */
enum WythoffStatus wythoff_sponge_generate(size_t n,
                                           uint32_t m,
                                           uint64_t max_cells,
                                           struct WythoffSponge **out);

/**
 * Number of points, or 0 for NULL.
 *
 * # Safety
 * `level` must be NULL or a live handle.
 */
size_t wythoff_sponge_len(const struct WythoffSponge *level);

/**
 * Copies point `index` into `coords`, which must hold `len = n` values.
 *
 * # Safety
 * `level` must be a live handle and `coords` writable for `len` values.
 */
enum WythoffStatus wythoff_sponge_point(const struct WythoffSponge *level,
                                        size_t index,
                                        uint64_t *coords,
                                        size_t len);

/**
 * # Safety
 * `level` must be NULL or a handle from this library not yet freed.
 */
void wythoff_sponge_free(struct WythoffSponge *level);

/**
 * Closure membership of the dyadic point with coordinates
 * `numerators[i] / 2^levels[i]`.
 *
 * # Safety
 * `numerators` and `levels` must point to `len` values; `out` must be
 * writable.
 */
enum WythoffStatus wythoff_q_membership(const uint64_t *numerators,
                                        const uint32_t *levels,
                                        size_t len,
                                        bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WYTHOFF_H */
