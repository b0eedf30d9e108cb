// Copyright 2026 The modpoly Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Classical modular polynomials Phi_l(X, Y) over Z and their reductions. */

#ifndef MODPOLY_MODPOLY_H_
#define MODPOLY_MODPOLY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MODPOLY_BUILDING)
#define MP_API __attribute__((visibility("default")))
#else
#define MP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_INVALID_ARGUMENT = 1,
  MP_ERR_STRUCTURAL = 2,
  MP_ERR_NOT_A_UNIT = 3,
  MP_ERR_SINGULAR_JACOBIAN = 4,
  MP_ERR_EXCLUDED_J_INVARIANT = 5,
  MP_ERR_SAMPLING_FAILURE = 6,
  MP_ERR_INSEPARABLE_TORSION = 7,
  MP_ERR_WOULD_SPLIT = 8,
  MP_ERR_NOT_SPLIT = 9,
  MP_ERR_NOT_ISOTROPIC = 10,
  MP_ERR_PREMATURE_SPLIT = 11,
  MP_ERR_DEGENERATE_SECANT = 12,
  MP_ERR_CONVERGENCE_FAILURE = 13,
  MP_ERR_NO_PARAMETERS = 14,
  MP_ERR_COEFFICIENT_NOT_RATIONAL = 15,
  MP_ERR_INTERNAL_INCONSISTENCY = 16,
  MP_ERR_FIXTURE = 17,
  MP_ERR_PARSE = 18,
  MP_ERR_IO = 19,
  MP_ERR_DEGENERATE = 20,
  MP_ERR_SKIPPED_PRIME = 21,
  MP_ERR_OUT_OF_MEMORY = 64,
  MP_ERR_UNKNOWN = 65
} mp_status;

typedef enum mp_format { MP_FORMAT_FLAT = 0, MP_FORMAT_JSON = 1 } mp_format;

/* A coefficient grid: Phi_l over Z, or its reduction mod some m. */
typedef struct mp_poly mp_poly;

typedef void (*mp_log_fn)(const char* message, void* user);

typedef struct mp_config {
  uint64_t seed;
  unsigned threads;       /* 0 means 1 */
  uint64_t primes_after;  /* CRT primes are taken above this bound */
  mp_log_fn log;          /* progress messages, may be NULL */
  void* log_user;
} mp_config;

MP_API void mp_config_init(mp_config* cfg);

MP_API const char* mp_version(void);
MP_API const char* mp_status_name(mp_status s);
/* Message of the last failure on the calling thread. */
MP_API const char* mp_last_error(void);

MP_API int mp_is_odd_prime(long long ell);
MP_API mp_status mp_parameters(int ell, int* c, int* n, long long* a, long long* b);
MP_API mp_status mp_next_prime(int ell, uint64_t after, uint64_t* p);

/* Phi_l over Z. */
MP_API mp_status mp_compute(int ell, const mp_config* cfg, mp_poly** out);
/* Phi_l mod m, m a decimal string >= 2. */
MP_API mp_status mp_compute_mod(int ell, const char* m, const mp_config* cfg, mp_poly** out);
/* Phi_l mod one suitable prime p (p = 0 picks the first that is not skipped).
 * direct != 0 uses the per-isogeny lift instead of isogeny diamonds. */
MP_API mp_status mp_compute_modp(int ell, uint64_t p, uint64_t seed, int direct, mp_poly** out);

/* Reads a flat or json grid over Z. */
MP_API mp_status mp_read(const char* path, mp_poly** out);
MP_API mp_status mp_parse(const char* text, size_t len, mp_poly** out);
/* Serializes into a malloc'ed string released with mp_string_free. */
MP_API mp_status mp_serialize(const mp_poly* poly, mp_format fmt, char** text, size_t* len);
MP_API void mp_string_free(char* text);
MP_API void mp_free(mp_poly* poly);

MP_API int mp_ell(const mp_poly* poly);
/* Decimal modulus, or NULL over Z. */
MP_API const char* mp_modulus(const mp_poly* poly);
/* Coefficient of X^i Y^j as decimal; needs len >= required size, which is
 * always written to *needed when non-NULL. */
MP_API mp_status mp_coefficient(const mp_poly* poly, size_t i, size_t j, char* buf, size_t len, size_t* needed);

/* Run statistics; zero for grids that were read. */
MP_API size_t mp_prime_count(const mp_poly* poly);
MP_API uint64_t mp_prime_at(const mp_poly* poly, size_t k);
MP_API size_t mp_skipped_count(const mp_poly* poly);
MP_API uint64_t mp_skipped_at(const mp_poly* poly, size_t k);
MP_API double mp_seconds(const mp_poly* poly);
MP_API double mp_max_log_height(const mp_poly* poly);
MP_API double mp_height_bound(int ell);

/* Symmetry, degree, monicity, the Kronecker congruence and the height bound;
 * with spot_check != 0 also compares against a fresh per-prime computation.
 * Sets *passed; when it is 0, failed receives the name of the first violated
 * predicate and a short explanation. */
MP_API mp_status mp_verify(const mp_poly* poly, int spot_check, uint64_t seed, int* passed, char* failed, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* MODPOLY_MODPOLY_H_ */
