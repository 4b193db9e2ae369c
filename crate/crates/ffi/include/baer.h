/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef BAER_H
#define BAER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first four match the command-line exit statuses.
 */
typedef enum BaerStatus {
  BAER_STATUS_OK = 0,
  BAER_STATUS_VERIFY_FAILED = 1,
  BAER_STATUS_INVALID_ARGUMENT = 2,
  BAER_STATUS_RESOURCE_LIMIT = 3,
  BAER_STATUS_NULL_POINTER = 4,
  BAER_STATUS_INTERNAL = 5,
  BAER_STATUS_PANIC = 6,
} BaerStatus;

/**
 * Opaque finitely generated abelian group.
 */
typedef struct BaerGroup BaerGroup;

/**
 * Opaque multiplier report.
 */
typedef struct BaerReport BaerReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a group expression such as `"Z^2 + Z/4 + Z/2"`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum BaerStatus baer_group_parse(const char *text, struct BaerGroup **out);

/**
 * Builds `Z^free_rank + Z/factors[0] + ...`; the factors must form a
 * descending divisor chain of integers at least 2.
 *
 * # Safety
 * `factors` must point to `len` readable values (may be null when `len` is 0).
 */
enum BaerStatus baer_group_new(uint64_t free_rank,
                               const uint64_t *factors,
                               size_t len,
                               struct BaerGroup **out);

/**
 * # Safety
 * `group` must come from this library and not have been freed.
 */
void baer_group_free(struct BaerGroup *group);

/**
 * Canonical text form, e.g. `"Z^2 + Z/12 + Z/6"`.
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum BaerStatus baer_group_to_string(const struct BaerGroup *group, char **out);

/**
 * Free rank as a decimal string.
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum BaerStatus baer_group_free_rank(const struct BaerGroup *group, char **out);

/**
 * Writes whether two groups are isomorphic.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum BaerStatus baer_group_equal(const struct BaerGroup *a, const struct BaerGroup *b, bool *out);

/**
 * Witt count of weight `weight` on `letters` (decimal) letters.
 *
 * # Safety
 * `letters` must be a NUL-terminated string; `out` must be writable.
 */
enum BaerStatus baer_witt(uint32_t weight, const char *letters, char **out);

/**
 * Iterated Witt count for the class row `row[0..len]`, innermost first.
 *
 * # Safety
 * `row` must point to `len` values; `letters` must be a NUL-terminated
 * string; `out` must be writable.
 */
enum BaerStatus baer_iterated_witt(const uint32_t *row,
                                   size_t len,
                                   const char *letters,
                                   char **out);

/**
 * Polynilpotent multiplier for the class row `row[0..len]`.
 *
 * # Safety
 * `group` must be live; `row` must point to `len` values; `out` writable.
 */
enum BaerStatus baer_polynilpotent_multiplier(const struct BaerGroup *group,
                                              const uint32_t *row,
                                              size_t len,
                                              struct BaerReport **out);

/**
 * `c`-nilpotent multiplier.
 *
 * # Safety
 * `group` must be live; `out` writable.
 */
enum BaerStatus baer_nilpotent_multiplier(const struct BaerGroup *group,
                                          uint32_t c,
                                          struct BaerReport **out);

/**
 * `l`-solvable multiplier.
 *
 * # Safety
 * `group` must be live; `out` writable.
 */
enum BaerStatus baer_solvable_multiplier(const struct BaerGroup *group,
                                         uint32_t l,
                                         struct BaerReport **out);

/**
 * # Safety
 * `report` must come from this library and not have been freed.
 */
void baer_report_free(struct BaerReport *report);

/**
 * The multiplier as a new group handle.
 *
 * # Safety
 * `report` must be live; `out` writable.
 */
enum BaerStatus baer_report_result(const struct BaerReport *report, struct BaerGroup **out);

/**
 * Formula-shaped sum such as `"Z/4^(3) + Z/2^(12)"`.
 *
 * # Safety
 * `report` must be live; `out` writable.
 */
enum BaerStatus baer_report_paper_shape(const struct BaerReport *report, char **out);

/**
 * JSON document with keys `free_rank`, `invariant_factors`, `f_values`,
 * `multiplicities`, `paper_shape`; all numbers as decimal strings.
 *
 * # Safety
 * `report` must be live; `out` writable.
 */
enum BaerStatus baer_report_to_json(const struct BaerReport *report, char **out);

/**
 * Runs the Schur-multiplier sweep. Returns `VerifyFailed` if any check
 * fails; the counts are written either way.
 *
 * # Safety
 * `checks` and `failures` must be writable.
 */
enum BaerStatus baer_verify_schur(uint32_t max_rank,
                                  uint64_t max_factor,
                                  size_t *checks,
                                  size_t *failures);

/**
 * # Safety
 * `s` must be a string returned by this library, or null.
 */
void baer_string_free(char *s);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *baer_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BAER_H */
