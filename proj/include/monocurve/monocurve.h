/*
 * monocurve C API.
 *
 * Every function returns an mc_status. On failure, mc_last_error() returns a
 * thread-local message naming the violated precondition. Strings handed out
 * through `char** out` are owned by the caller and released with
 * mc_string_free. Handles are immutable after creation and may be shared
 * across threads.
 */
#ifndef MONOCURVE_H
#define MONOCURVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MONOCURVE_BUILD)
#define MC_API __declspec(dllexport)
#else
#define MC_API __declspec(dllimport)
#endif
#else
#define MC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
  MC_OK = 0,
  MC_INVALID_INPUT = 1,     /* a precondition on the input is violated */
  MC_LIMIT_EXCEEDED = 2,    /* search cap, box or table limit hit */
  MC_VALIDATION_FAILED = 3, /* a validation sweep found a mismatch */
  MC_INTERNAL_ERROR = 4
} mc_status;

typedef enum mc_method {
  MC_METHOD_BRUTE = 0,
  MC_METHOD_CLOSED = 1,
  MC_METHOD_BOTH = 2,
  MC_METHOD_ETO = 3
} mc_method;

typedef enum mc_family { MC_FAMILY_ARITHMETIC = 0, MC_FAMILY_P1 = 1, MC_FAMILY_ALL = 2 } mc_family;

typedef struct mc_curve mc_curve;

MC_API const char* mc_version(void);
MC_API const char* mc_last_error(void);
MC_API void mc_string_free(char* str);

MC_API mc_status mc_curve_create(const int64_t* seq, size_t len, int assume_cm, mc_curve** out);
MC_API void mc_curve_destroy(mc_curve* curve);

MC_API mc_status mc_curve_cm_assumed(const mc_curve* curve, int* out);
MC_API mc_status mc_curve_group_index(const mc_curve* curve, int64_t* out);
MC_API mc_status mc_curve_contains(const mc_curve* curve, int64_t x, int64_t y, int* out);
MC_API mc_status mc_curve_in_group(const mc_curve* curve, int64_t x, int64_t y, int* out);

/* Hilbert–Kunz multiplicity as num/den (MC_METHOD_CLOSED or MC_METHOD_ETO). */
MC_API mc_status mc_hk(const int64_t* seq, size_t len, mc_method method, int64_t* num, int64_t* den);
MC_API mc_status mc_frobenius_power_colength(const mc_curve* curve, int64_t q, int64_t* out);

/* JSON reports, schema "monocurve/1". A cap of 0 selects the default. */
MC_API mc_status mc_pf_json(const int64_t* seq, size_t len, char** out);
MC_API mc_status mc_apery_json(const int64_t* seq, size_t len, int64_t modulus, char** out);
MC_API mc_status mc_derivations_json(const mc_curve* curve, mc_method method, int64_t cap, char** out);
MC_API mc_status mc_hk_json(const int64_t* seq, size_t len, mc_method method, int64_t frobenius_q, int assume_cm,
                            char** out);
/* Returns MC_VALIDATION_FAILED (with the report in *out) when any sweep mismatches. */
MC_API mc_status mc_validate_json(int64_t max_np, mc_family family, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MONOCURVE_H */
