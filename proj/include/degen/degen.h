/*
 * C interface to the degen library.
 *
 * Every entry point returns a degen_status. Computations produce an opaque
 * degen_result holding a JSON document (and, for tabular commands, a TSV
 * rendering); results are owned by the caller and released with
 * degen_result_destroy. Configuration lives in an opaque degen_session.
 *
 * On failure the session keeps a message retrievable with
 * degen_session_last_error until the next call on that session. A session
 * must not be used from two threads at once; distinct sessions are
 * independent.
 */
#ifndef DEGEN_DEGEN_H
#define DEGEN_DEGEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(DEGEN_BUILDING_LIBRARY)
#define DEGEN_API __attribute__((visibility("default")))
#else
#define DEGEN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum degen_status {
  DEGEN_OK = 0,
  DEGEN_ERR_INVALID_ARGUMENT = 1,
  DEGEN_ERR_PARSE = 2,
  DEGEN_ERR_NON_SPLIT = 3,
  DEGEN_ERR_FIELD_TOO_SMALL = 4,
  DEGEN_ERR_INFEASIBLE = 5,
  DEGEN_ERR_INADMISSIBLE_PRIME = 6,
  DEGEN_ERR_INSUFFICIENT_PRIMES = 7,
  DEGEN_ERR_GUARDRAIL = 8,
  DEGEN_ERR_NOT_POLYNOMIAL = 9,
  DEGEN_ERR_TYPE_MISMATCH = 10,
  DEGEN_ERR_COUNTEREXAMPLE = 11,
  DEGEN_ERR_CHECK_FAILED = 12,
  DEGEN_ERR_INTERNAL = 13
} degen_status;

typedef struct degen_session degen_session;
typedef struct degen_result degen_result;

DEGEN_API const char* degen_status_name(degen_status status);
DEGEN_API const char* degen_version(void);

DEGEN_API degen_status degen_session_create(degen_session** out);
DEGEN_API void degen_session_destroy(degen_session* session);
DEGEN_API const char* degen_session_last_error(const degen_session* session);

/* "Q", "rational", "F_7", "7" or a field JSON object. */
DEGEN_API degen_status degen_session_set_field(degen_session* session, const char* field);
DEGEN_API degen_status degen_session_set_seed(degen_session* session, uint64_t seed);
DEGEN_API degen_status degen_session_set_primes(degen_session* session, const uint64_t* primes,
                                                size_t count);
DEGEN_API degen_status degen_session_set_max_enum(degen_session* session, uint64_t max_enum);
DEGEN_API degen_status degen_session_set_threads(degen_session* session, unsigned threads);
DEGEN_API degen_status degen_session_set_samples(degen_session* session, int samples);
/* Nonzero: replace inadmissible primes and top the list up as needed. */
DEGEN_API degen_status degen_session_set_extend_primes(degen_session* session, int enabled);
/* Nonzero: witness checks evaluate along a one-parameter curve. */
DEGEN_API degen_status degen_session_set_curve_mode(degen_session* session, int enabled);

DEGEN_API degen_status degen_analyze(degen_session* session, const char* matrix_json,
                                     degen_result** out);
DEGEN_API degen_status degen_sandwich(degen_session* session, const char* delta_json,
                                      degen_result** out);
/* mode: "ss-to-x" or "x-to-u". */
DEGEN_API degen_status degen_witness(degen_session* session, const char* delta_json,
                                     const char* mode, degen_result** out);
/* subject_json: matrix or descriptor; q = 0 takes q from a prime-field matrix. */
DEGEN_API degen_status degen_count_fixed(degen_session* session, const char* subject_json, int d,
                                         uint64_t q, degen_result** out);
DEGEN_API degen_status degen_dimension(degen_session* session, const char* descriptor_json, int d,
                                       degen_result** out);
DEGEN_API degen_status degen_verify_sum(degen_session* session, int n, int s, degen_result** out);
DEGEN_API degen_status degen_verify_sandwich(degen_session* session, const char* delta_json,
                                             degen_result** out);
DEGEN_API degen_status degen_enumerate_types(degen_session* session, int n, degen_result** out);

DEGEN_API const char* degen_result_json(const degen_result* result);
/* NULL when the command has no tabular form. */
DEGEN_API const char* degen_result_tsv(const degen_result* result);
/* 1 when every check in the result passed. */
DEGEN_API int degen_result_passed(const degen_result* result);
DEGEN_API void degen_result_destroy(degen_result* result);

#ifdef __cplusplus
}
#endif

#endif
