#ifndef DIVSUM_H
#define DIVSUM_H

/* Generated by cbindgen from the divsum-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Tail-closure selector for [`ds_sum_cf`].
typedef enum DsClosure {
  // Plain convergent bracketing; `closure_param` is ignored.
  DS_CLOSURE_NONE = 0,
  // Pairwise closure centered at `closure_param`.
  DS_CLOSURE_PAIRED = 1,
  // Single-step closure starting at `closure_param`.
  DS_CLOSURE_SINGLE = 2,
} DsClosure;

// Status codes returned by every fallible function.
typedef enum DsStatus {
  // Success.
  DS_STATUS_OK = 0,
  // A required pointer argument was null.
  DS_STATUS_NULL_POINTER = 1,
  // Arguments violate a documented precondition.
  DS_STATUS_INVALID_ARGUMENT = 2,
  // Arguments are structurally fine but outside the numeric domain.
  DS_STATUS_DOMAIN = 3,
  // The computation could not proceed (division breakdown, closure
  // pattern not found, ...).
  DS_STATUS_FAILED = 4,
  // Interior panic; a bug in the library, never expected.
  DS_STATUS_INTERNAL = 5,
} DsStatus;

// Opaque handle to a factorial-type series family.
typedef struct DsFamily DsFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create a family handle from rational parameters. On success writes the
// handle to `out` (release with [`ds_family_free`]).
//
// # Safety
// `out` must be a valid writable pointer.
enum DsStatus ds_family_new(int64_t p_num,
                            int64_t p_den,
                            int64_t q_num,
                            int64_t q_den,
                            int64_t m_num,
                            int64_t m_den,
                            int64_t x_num,
                            int64_t x_den,
                            struct DsFamily **out);

// Release a family handle. Accepts null.
//
// # Safety
// `family` must be null or a pointer obtained from [`ds_family_new`] that
// has not been freed yet.
void ds_family_free(struct DsFamily *family);

// Sum the family's continued fraction. Writes the value and its error
// estimate through the out-pointers.
//
// # Safety
// `family` must be a live handle; `out_value` and `out_error` must be valid
// writable pointers.
enum DsStatus ds_sum_cf(const struct DsFamily *family,
                        uintptr_t levels,
                        enum DsClosure closure,
                        uint32_t closure_param,
                        double *out_value,
                        double *out_error);

// Sum the family by the iterated difference transform on `depth` exact
// terms (peel-two schedule run to exhaustion).
//
// # Safety
// `family` must be a live handle; out-pointers must be writable.
enum DsStatus ds_sum_transform(const struct DsFamily *family,
                               uintptr_t depth,
                               double *out_value,
                               double *out_error);

// Ground-truth half-line integral for the family series at unit argument.
//
// # Safety
// Out-pointers must be writable.
enum DsStatus ds_borel_oracle(int64_t p_num,
                              int64_t p_den,
                              int64_t q_num,
                              int64_t q_den,
                              double tolerance,
                              double *out_value,
                              double *out_error);

// Composite trapezoid area of the unit-interval curve whose area equals the
// alternating factorial series value.
//
// # Safety
// Out-pointers must be writable.
enum DsStatus ds_trapezoid_factorial_unit(uint64_t panels, double *out_value, double *out_error);

// Run a reproduction protocol (`"s15"` ... `"s29"`) and return its report
// as a JSON string. Release the string with [`ds_string_free`].
//
// # Safety
// `section` must be a valid nul-terminated string; `out_json` must be a
// valid writable pointer.
enum DsStatus ds_repro_json(const char *section, char **out_json);

// Release a string returned by this library. Accepts null.
//
// # Safety
// `s` must be null or a pointer returned by this library that has not been
// freed yet.
void ds_string_free(char *s);

// Library version as a static nul-terminated string.
const char *ds_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIVSUM_H */
