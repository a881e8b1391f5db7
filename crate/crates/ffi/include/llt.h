#ifndef LLT_FFI_H
#define LLT_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LltStatus {
  LLT_STATUS_OK = 0,
  LLT_STATUS_NULL_POINTER = 1,
  LLT_STATUS_INVALID_ARGUMENT = 2,
  LLT_STATUS_BOUND_EXCEEDED = 3,
  LLT_STATUS_NOT_IN_SPAN = 4,
  LLT_STATUS_VERIFICATION_FAILED = 5,
  LLT_STATUS_PANIC = 6,
} LltStatus;

typedef enum LltBasis {
  LLT_BASIS_SCHUR = 0,
  LLT_BASIS_TWO_SCHUR = 1,
  LLT_BASIS_FUNDAMENTAL = 2,
  LLT_BASIS_MONOMIAL = 3,
} LltBasis;

// A symmetric function with Laurent polynomial coefficients, stored in
// the Schur basis.
typedef struct LltSymFunc LltSymFunc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *llt_last_error(void);

// `L(n, λ)` for `λ` inside the staircase `δ_{n−1}`.
//
// # Safety
// `parts` must point to `len` readable values (or be null when `len` is 0)
// and `out` must be writable.
enum LltStatus llt_unicellular(size_t n, const size_t *parts, size_t len, struct LltSymFunc **out);

// The LLT polynomial of a tuple written over `H`, `V`, `0`, `1`.
//
// # Safety
// `tuple` must be a nul-terminated string and `out` must be writable.
enum LltStatus llt_tuple(const char *tuple, struct LltSymFunc **out);

// The 2-Schur function of a 2-bounded partition.
//
// # Safety
// As for [`llt_unicellular`].
enum LltStatus llt_kschur(const size_t *parts, size_t len, struct LltSymFunc **out);

// The Hall–Littlewood function `H_λ`.
//
// # Safety
// As for [`llt_unicellular`].
enum LltStatus llt_hall_littlewood(const size_t *parts, size_t len, struct LltSymFunc **out);

// Degree of `f`, or 0 for a null handle.
//
// # Safety
// `f` must be null or a live handle.
size_t llt_symfunc_degree(const struct LltSymFunc *f);

// Writes whether `a` and `b` are equal.
//
// # Safety
// `a` and `b` must be live handles and `out` must be writable.
enum LltStatus llt_symfunc_equal(const struct LltSymFunc *a, const struct LltSymFunc *b, bool *out);

// `f` rendered in `basis`. Release the string with [`llt_string_free`].
//
// # Safety
// `f` must be a live handle and `out` must be writable.
enum LltStatus llt_symfunc_to_string(const struct LltSymFunc *f, enum LltBasis basis, char **out);

// `f` in `basis` as JSON. Release the string with [`llt_string_free`].
//
// # Safety
// As for [`llt_symfunc_to_string`].
enum LltStatus llt_symfunc_to_json(const struct LltSymFunc *f, enum LltBasis basis, char **out);

// Runs a named verification sweep. `max_n` of 0 selects the default
// bound. The JSON report is written to `report` when it is non-null;
// failing cases give [`LltStatus::VerificationFailed`].
//
// # Safety
// `name` must be a nul-terminated string and `report` null or writable.
enum LltStatus llt_verify(const char *name,
                          size_t max_n,
                          uint64_t seed,
                          size_t samples,
                          char **report);

// # Safety
// `f` must be null or a handle not yet freed.
void llt_symfunc_free(struct LltSymFunc *f);

// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void llt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LLT_FFI_H */
