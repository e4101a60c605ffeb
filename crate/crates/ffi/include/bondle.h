#ifndef BONDLE_H
#define BONDLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BondleStatus {
  BONDLE_STATUS_OK = 0,
  BONDLE_STATUS_NULL_POINTER = 1,
  BONDLE_STATUS_INVALID_UTF8 = 2,
  BONDLE_STATUS_PARSE = 3,
  BONDLE_STATUS_MALFORMED = 4,
  BONDLE_STATUS_NOT_APPLICABLE = 5,
  BONDLE_STATUS_ALGEBRA = 6,
  BONDLE_STATUS_COLORING = 7,
  BONDLE_STATUS_OVERFLOW = 8,
  BONDLE_STATUS_PANIC = 9,
} BondleStatus;

/**
 * A quandle with bond maps.
 */
typedef struct BondleAlgebra BondleAlgebra;

/**
 * A parsed Gauss code.
 */
typedef struct BondleCode BondleCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bondle_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void bondle_string_free(char *s);

/**
 * Parses a Gauss code. The code need not be well formed.
 *
 * # Safety
 * `code_text` must be a nul-terminated string and `out` a writable pointer.
 */
enum BondleStatus bondle_code_parse(const char *code_text, struct BondleCode **out);

/**
 * # Safety
 * `code` must be null or a handle from this library, not yet freed.
 */
void bondle_code_free(struct BondleCode *code);

/**
 * Canonical text of the code, or null on a null handle.
 *
 * # Safety
 * `code` must be a live handle.
 */
char *bondle_code_to_string(const struct BondleCode *code);

/**
 * Validation report as JSON, or null on a null handle.
 *
 * # Safety
 * `code` must be a live handle.
 */
char *bondle_code_validate_json(const struct BondleCode *code);

/**
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum BondleStatus bondle_code_is_well_formed(const struct BondleCode *code, bool *out);

/**
 * Writes a new handle holding the normalized code.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum BondleStatus bondle_code_normalize(const struct BondleCode *code, struct BondleCode **out);

/**
 * Applies one move given as JSON, e.g. `{"move": "I_remove", "position": 1}`,
 * and writes a new handle with the result.
 *
 * # Safety
 * `code` must be a live handle, `spec` a nul-terminated string and `out`
 * writable.
 */
enum BondleStatus bondle_code_apply_move(const struct BondleCode *code,
                                         const char *spec,
                                         struct BondleCode **out);

/**
 * Affine bondle on `Z_n` with `x ▷ y = a x + (1 - a) y`, `R1 = b x + (1 - b) y`
 * and `R3 = m x + (1 - m) y`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BondleStatus bondle_algebra_affine(uint64_t n,
                                        uint64_t a,
                                        uint64_t b,
                                        uint64_t m,
                                        struct BondleAlgebra **out);

/**
 * Reads a bondle from a JSON table with `order`, `op`, `R1`, `R2` and
 * optionally `inv_op` and `R3`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum BondleStatus bondle_algebra_from_json(const char *json, struct BondleAlgebra **out);

/**
 * # Safety
 * `algebra` must be null or a handle from this library, not yet freed.
 */
void bondle_algebra_free(struct BondleAlgebra *algebra);

/**
 * Carrier size, or 0 on a null handle.
 *
 * # Safety
 * `algebra` must be a live handle.
 */
size_t bondle_algebra_order(const struct BondleAlgebra *algebra);

/**
 * Checks the oriented bondle axioms exhaustively.
 *
 * # Safety
 * `algebra` must be a live handle and `passed` writable.
 */
enum BondleStatus bondle_algebra_check(const struct BondleAlgebra *algebra, bool *passed);

/**
 * Counts colorings of a sheet-free, helix-free code. Fails with
 * `Overflow` if a count does not fit in 64 bits.
 *
 * # Safety
 * Handles must be live; `total` and `trivial` writable.
 */
enum BondleStatus bondle_count_colorings(const struct BondleCode *code,
                                         const struct BondleAlgebra *algebra,
                                         uint64_t *total,
                                         uint64_t *trivial);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BONDLE_H */
