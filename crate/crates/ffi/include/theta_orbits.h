#ifndef THETA_ORBITS_H
#define THETA_ORBITS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ThetaMethod {
  THETA_METHOD_AUTO = 0,
  THETA_METHOD_ONE = 1,
  THETA_METHOD_TWO = 2,
} ThetaMethod;

typedef enum ThetaStatus {
  THETA_STATUS_OK = 0,
  THETA_STATUS_NULL_POINTER = 1,
  THETA_STATUS_INVALID_UTF8 = 2,
  THETA_STATUS_INVALID_TYPE = 3,
  THETA_STATUS_INVALID_KAC = 4,
  THETA_STATUS_RETRY_BUDGET = 5,
  THETA_STATUS_FAILED = 6,
  THETA_STATUS_PANIC = 7,
} ThetaStatus;

// A simple Lie algebra with its Chevalley basis.
typedef struct ThetaAlgebra ThetaAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next call into this library on the same thread.
const char *theta_last_error(void);

// Builds the algebra of a type such as `"E8"`.
//
// # Safety
// `type_name` must be a nul-terminated string and `out` a valid pointer.
enum ThetaStatus theta_algebra_new(const char *type_name, struct ThetaAlgebra **out);

// # Safety
// `alg` must come from [`theta_algebra_new`] and not be used afterwards.
void theta_algebra_free(struct ThetaAlgebra *alg);

// Dimension of the algebra, 0 for a null handle.
//
// # Safety
// `alg` must be null or a live handle.
uintptr_t theta_algebra_dim(const struct ThetaAlgebra *alg);

// # Safety
// `alg` must be null or a live handle.
uintptr_t theta_algebra_rank(const struct ThetaAlgebra *alg);

// Classifies the nilpotent orbits of the grading with Kac labels `kac`
// (e.g. `"0,0,1"`) and writes the orbit file as JSON to `*out_json`.
//
// # Safety
// `alg` must be a live handle, `kac` a nul-terminated string and
// `out_json` a valid pointer.
enum ThetaStatus theta_orbits_json(const struct ThetaAlgebra *alg,
                                   const char *kac,
                                   enum ThetaMethod method,
                                   uint64_t seed,
                                   char **out_json);

// Finds the N-regular inner automorphism of order `m` and writes its orbit
// file as JSON to `*out_json`.
//
// # Safety
// `alg` must be a live handle and `out_json` a valid pointer.
enum ThetaStatus theta_nregular_json(const struct ThetaAlgebra *alg,
                                     uint32_t m,
                                     enum ThetaMethod method,
                                     uint64_t seed,
                                     char **out_json);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void theta_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETA_ORBITS_H */
