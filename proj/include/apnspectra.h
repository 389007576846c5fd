/*
 * apnspectra: C API for constructing quadratic APN function families over
 * GF(2^n), computing their exact Walsh spectra, kernel bounds, and the weight
 * distributions of the associated binary codes.
 *
 * All handles are opaque, created by apn_*_create/compute functions and
 * released with the matching apn_*_destroy. Fallible calls return an
 * apn_status; on failure apn_last_error() gives a thread-local message.
 */
#ifndef APNSPECTRA_H
#define APNSPECTRA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define APN_API __declspec(dllexport)
#else
#define APN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apn_status {
    APN_OK = 0,
    APN_ERR_ARGUMENT = 1,    /* null pointer / malformed input */
    APN_ERR_VALIDATION = 2,  /* constraint violation (named in apn_last_error) */
    APN_ERR_UNSUPPORTED = 3, /* operation guarded away at this size */
    APN_ERR_IO = 4,
    APN_ERR_INTERNAL = 5
} apn_status;

typedef enum apn_family {
    APN_FAMILY_1 = 0,
    APN_FAMILY_2 = 1,
    APN_FAMILY_3 = 2,
    APN_FAMILY_4 = 3,
    APN_FAMILY_5 = 4,
    APN_FAMILY_GOLD = 5,
    APN_FAMILY_DILLON = 6,
    APN_FAMILY_CUSTOM = 7
} apn_family;

typedef enum apn_table_format { APN_TABLE_BINARY = 0, APN_TABLE_HEX = 1 } apn_table_format;

typedef struct apn_field apn_field;
typedef struct apn_table apn_table;
typedef struct apn_spectrum apn_spectrum;
typedef struct apn_kernels apn_kernels;
typedef struct apn_weights apn_weights;

APN_API const char* apn_status_name(apn_status s);
APN_API const char* apn_last_error(void);

/* ---- fields ---------------------------------------------------------- */

/* poly = 0 selects the smallest irreducible of degree n; primitive = 0 the
 * smallest element of order 2^n - 1. Polynomial masks use bit i for the
 * coefficient of x^i. */
APN_API apn_status apn_field_create(int n, uint64_t poly, uint32_t primitive, apn_field** out);
APN_API void apn_field_destroy(apn_field* f);

APN_API int apn_field_degree(const apn_field* f);
APN_API uint64_t apn_field_poly(const apn_field* f);
APN_API uint32_t apn_field_primitive(const apn_field* f);
APN_API uint64_t apn_field_order(const apn_field* f);
/* Writes up to cap prime/exponent pairs of the factorization of 2^n - 1;
 * returns the number of distinct primes. */
APN_API size_t apn_field_order_factors(const apn_field* f, uint64_t* primes, int* exponents,
                                       size_t cap);

APN_API uint32_t apn_field_add(uint32_t x, uint32_t y);
APN_API uint32_t apn_field_mul(const apn_field* f, uint32_t x, uint32_t y);
APN_API apn_status apn_field_pow(const apn_field* f, uint32_t x, int64_t e, uint32_t* out);
APN_API uint32_t apn_field_frobenius(const apn_field* f, uint32_t x, int i);
APN_API int apn_field_trace(const apn_field* f, uint32_t x);
APN_API int apn_field_is_primitive(const apn_field* f, uint32_t x);

/* Reduction polynomial a family prefers when the caller has none (Dillon's
 * example is tied to one representation of GF(2^6)). */
APN_API uint64_t apn_family_default_poly(apn_family family, int n);

/* ---- truth tables ----------------------------------------------------- */

typedef struct apn_params {
    int family; /* apn_family */
    int n;      /* required for family4 / gold / custom; derived otherwise */
    int k;
    int s;
    int gold_d;
    uint32_t alpha, beta, u; /* 0 = library default */
    uint32_t v;
    int v_set;
    const uint32_t* gammas; /* family 3; NULL = all-zero default */
    size_t n_gammas;
    uint64_t gamma_seed; /* used when gamma_seed_set != 0 and gammas == NULL */
    int gamma_seed_set;
    const uint32_t* custom_coeffs; /* custom: f = sum coeff_i x^exp_i + sum Tr(x^te_j) */
    const int64_t* custom_exps;
    size_t n_custom;
    const int64_t* custom_trace_exps;
    size_t n_custom_trace;
    int relax_family3; /* drop the k-odd / s-odd conditions */
} apn_params;

/* Degree of the field the parameter set implies (3k, 4k, 2k, or n). */
APN_API apn_status apn_params_degree(const apn_params* p, int* out);

APN_API apn_status apn_table_build(const apn_field* f, const apn_params* p, apn_table** out);
APN_API void apn_table_destroy(apn_table* t);

APN_API int apn_table_degree_n(const apn_table* t);
APN_API const uint32_t* apn_table_values(const apn_table* t, size_t* len);
APN_API int apn_table_algebraic_degree(const apn_table* t);
APN_API uint32_t apn_table_differential_uniformity(const apn_table* t);
APN_API int apn_table_is_apn(const apn_table* t);
APN_API int64_t apn_table_walsh_point(const apn_table* t, uint32_t a, uint32_t b);
APN_API uint64_t apn_table_field_poly(const apn_table* t);
APN_API uint32_t apn_table_field_primitive(const apn_table* t);
/* Writes the provenance parameters back out (gamma/custom arrays omitted). */
APN_API apn_status apn_table_params(const apn_table* t, apn_params* out);

APN_API apn_status apn_table_write(const apn_table* t, const char* path, apn_table_format fmt);
APN_API apn_status apn_table_read(const char* path, apn_table** out);

/* ---- spectra ----------------------------------------------------------- */

APN_API apn_status apn_spectrum_compute(const apn_table* t, int threads, apn_spectrum** out);
APN_API void apn_spectrum_destroy(apn_spectrum* s);

APN_API size_t apn_spectrum_size(const apn_spectrum* s);
APN_API apn_status apn_spectrum_entry(const apn_spectrum* s, size_t i, int64_t* value,
                                      uint64_t* count);
APN_API int64_t apn_spectrum_nonlinearity(const apn_spectrum* s);
APN_API int apn_spectrum_is_almost_bent(const apn_spectrum* s);

/* Value set the family's proved spectrum statement asserts at this degree.
 * Returns the number of values (<= 5) or 0 when no such statement exists. */
APN_API size_t apn_theorem_spectrum(apn_family family, int n, int64_t* buf, size_t cap);

/* ---- linearized kernels ------------------------------------------------ */

/* Per-b kernel nullity histogram over all b != 0 (families 1/2 use their
 * dedicated polynomial builders, other quadratic tables the bilinear form). */
APN_API apn_status apn_kernels_compute(const apn_table* t, int threads, apn_kernels** out);
APN_API void apn_kernels_destroy(apn_kernels* k);
APN_API int apn_kernels_max_nullity(const apn_kernels* k);
APN_API uint64_t apn_kernels_count(const apn_kernels* k, int nullity);

/* ---- code weight distributions ---------------------------------------- */

APN_API apn_status apn_weights_from_spectrum(const apn_table* t, int threads, apn_weights** out);
APN_API apn_status apn_weights_direct(const apn_table* t, apn_weights** out);
APN_API apn_status apn_weights_pless(int n, const int64_t* walsh_values, size_t count,
                                     apn_weights** out);
APN_API void apn_weights_destroy(apn_weights* w);

APN_API uint32_t apn_weights_length(const apn_weights* w);
APN_API uint32_t apn_weights_dim(const apn_weights* w);
APN_API size_t apn_weights_size(const apn_weights* w);
APN_API apn_status apn_weights_entry(const apn_weights* w, size_t i, uint32_t* weight,
                                     uint64_t* count);
APN_API int apn_weights_equal(const apn_weights* a, const apn_weights* b);

#ifdef __cplusplus
}
#endif

#endif /* APNSPECTRA_H */
