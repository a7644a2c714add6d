/*
 * C interface to the partition-parity toolkit.
 *
 * Every call returns a ppar_status.  On failure the message for the calling
 * thread is available from ppar_last_error() until the next failing call on
 * that thread.  Strings handed out through char** parameters are owned by the
 * caller and released with ppar_string_free().
 *
 * Handles are immutable once created; concurrent calls that only read a
 * handle are safe.
 */
#ifndef PPAR_H
#define PPAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PPAR_API __declspec(dllexport)
#else
#  define PPAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppar_status {
    PPAR_OK = 0,
    PPAR_ERR_INVALID_ARGUMENT = 1,
    PPAR_ERR_RING_MISMATCH = 2,
    PPAR_ERR_PRECISION_EXHAUSTED = 3,
    PPAR_ERR_NON_UNIT = 4,
    PPAR_ERR_RESOURCE = 5,
    PPAR_ERR_STREAM_TOO_SHORT = 6,
    PPAR_ERR_CACHE_FORMAT = 7,
    PPAR_ERR_IO = 8,
    PPAR_ERR_INTERNAL = 99
} ppar_status;

typedef struct ppar_stream ppar_stream;
typedef struct ppar_series ppar_series;

/* Coefficient ring selector for series: 0 = integers, 2 = GF(2) packed,
 * any other m >= 3 = residues mod m. */
#define PPAR_RING_INT 0u

PPAR_API const char *ppar_version(void);
PPAR_API const char *ppar_last_error(void);
PPAR_API void ppar_string_free(char *s);

/* ---- partition residues ---- */

PPAR_API ppar_status ppar_stream_generate(uint64_t length, uint64_t modulus, ppar_stream **out);
PPAR_API ppar_status ppar_stream_load(const char *path, ppar_stream **out);
PPAR_API ppar_status ppar_stream_save(const ppar_stream *s, const char *path);
PPAR_API void ppar_stream_free(ppar_stream *s);
PPAR_API uint64_t ppar_stream_length(const ppar_stream *s);
PPAR_API uint64_t ppar_stream_modulus(const ppar_stream *s);
PPAR_API ppar_status ppar_stream_value(const ppar_stream *s, uint64_t n, uint64_t *out);
/* "0.5004..." style to `digits` decimals; round_nearest = 0 truncates. */
PPAR_API ppar_status ppar_proportion_even(const ppar_stream *s, uint64_t n, int digits, int round_nearest, char **out);
/* Exact p(n) as a decimal string. */
PPAR_API ppar_status ppar_partition_exact(uint64_t n, char **out);

/* ---- series ---- */

/* prod eta(deltas[i] tau)^exponents[i], exponents strictly below q^prec. */
PPAR_API ppar_status ppar_series_eta_quotient(const int64_t *deltas, const int64_t *exponents, size_t count,
                                              uint64_t ring, int64_t prec, ppar_series **out);
/* Same, from the text form "delta:r,delta:r,...". */
PPAR_API ppar_status ppar_series_eta_quotient_parse(const char *text, uint64_t ring, int64_t prec, ppar_series **out);
/* coeffs[i] is the coefficient of q^((lo + i)/denom); prec = lo + count. */
PPAR_API ppar_status ppar_series_from_coefficients(uint64_t ring, int64_t denom, int64_t lo, const int64_t *coeffs,
                                                   size_t count, ppar_series **out);
PPAR_API void ppar_series_free(ppar_series *s);
PPAR_API ppar_status ppar_series_mul(const ppar_series *a, const ppar_series *b, ppar_series **out);
PPAR_API ppar_status ppar_series_inv(const ppar_series *a, ppar_series **out);
PPAR_API ppar_status ppar_series_pow(const ppar_series *a, int64_t e, ppar_series **out);
PPAR_API ppar_status ppar_series_u(const ppar_series *a, uint64_t ell, ppar_series **out);
PPAR_API ppar_status ppar_series_v(const ppar_series *a, uint64_t ell, ppar_series **out);
PPAR_API ppar_status ppar_series_hecke_t0_mod2(const ppar_series *a, uint64_t ell, ppar_series **out);
/* *is_infinite = 1 for a series that is zero to its precision; otherwise the
 * order is written as "p/q" to *order. */
PPAR_API ppar_status ppar_series_ord_q(const ppar_series *a, int *is_infinite, char **order);
PPAR_API ppar_status ppar_series_support_in_multiples(const ppar_series *a, int64_t c, uint64_t p, int *result);
PPAR_API ppar_status ppar_series_window(const ppar_series *a, int64_t *denom, int64_t *lo, int64_t *prec);
/* Coefficient at numerator n as a decimal string. */
PPAR_API ppar_status ppar_series_coefficient(const ppar_series *a, int64_t n, char **out);
PPAR_API ppar_status ppar_series_to_text(const ppar_series *a, char **out);
PPAR_API ppar_status ppar_series_to_json(const ppar_series *a, char **out);

/* ---- congruences and bounds ---- */

PPAR_API ppar_status ppar_delta_of(uint64_t t, uint64_t *out);
/* Stream length needed to check t against the prime bound (remark2 = 0) or the composite bound (remark2 = 1). */
PPAR_API ppar_status ppar_required_length(uint64_t t, int remark2, uint64_t *out);
/* BoundReport JSON for prime ell; *verdict mirrors the report. */
PPAR_API ppar_status ppar_theorem_report_json(const ppar_stream *s, uint64_t ell, int *verdict, char **json);
PPAR_API ppar_status ppar_remark2_report_json(const ppar_stream *s, uint64_t t, int *verdict, char **json);
/* BoundReport JSON with the cusp/Sturm report nested under "sturm". */
PPAR_API ppar_status ppar_sweep_entry_json(const ppar_stream *s, uint64_t ell, int *verdict, char **json);
PPAR_API ppar_status ppar_legacy_bound_json(uint64_t t, uint64_t r, char **json);
/* stream may be NULL, in which case one is generated internally. */
PPAR_API ppar_status ppar_sturm_report_json(const ppar_stream *s, uint64_t ell, int *ok, char **json);
/* prec = 0 selects the default window ell (ell^2 - 1). */
PPAR_API ppar_status ppar_hecke_check_json(uint64_t ell, int64_t prec, int *nonvanishing, char **json);
PPAR_API ppar_status ppar_verify_ramanujan(uint64_t ell, uint64_t count, int *holds, uint64_t *first_failure);

#ifdef __cplusplus
}
#endif

#endif
