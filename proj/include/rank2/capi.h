#ifndef RANK2_CAPI_H
#define RANK2_CAPI_H

/* C API of the rank-2 cluster algebra engine (librank2cluster).
 *
 * All functions return a status code; results are returned as UTF-8 strings
 * (JSON unless a text flag is set) owned by the library. Free every returned
 * string with r2c_string_free. An algebra handle owns per-chart caches and a
 * last-error message; handles are not thread-safe, use one per thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct r2c_algebra r2c_algebra;

typedef enum r2c_status {
  R2C_OK = 0,
  R2C_ERR_INEXACT = 1,
  R2C_ERR_ZERO_POLY = 2,
  R2C_ERR_RING_MISMATCH = 3,
  R2C_ERR_NOT_AFFINE = 4,
  R2C_ERR_WINDOW_EXCEEDED = 5,
  R2C_ERR_NOT_POINTED = 6,
  R2C_ERR_INVALID_LABEL = 7,
  R2C_ERR_NOT_FORBIDDEN = 8,
  R2C_ERR_UNSUPPORTED = 9,
  R2C_ERR_UNSUPPORTED_INDEX = 10,
  R2C_ERR_NOT_IN_ALGEBRA = 11,
  R2C_ERR_PARSE = 12,
  R2C_ERR_INVALID_ARGUMENT = 13,
  R2C_ERR_INTERNAL = 14
} r2c_status;

/* Name of a status code ("OK", "INEXACT", ...). Static storage. */
const char* r2c_status_name(r2c_status s);

/* window_cap = 0 uses the default (CLUSTER_WINDOW_CAP env or 64).
 * Returns NULL when b < 1 or c < 1. */
r2c_algebra* r2c_algebra_new(int b, int c, int window_cap);
void r2c_algebra_free(r2c_algebra* a);

/* Message of the last failing call on this handle. Valid until the next call. */
const char* r2c_last_error(const r2c_algebra* a);

void r2c_string_free(char* s);

/* Cluster variable y_m expanded in the chart (y_base, y_{base+1}).
 * as_text = 0 emits LaurentPoly JSON, 1 the human-readable form. */
r2c_status r2c_gen(r2c_algebra* a, long long base, long long m, int as_text, char** out);

/* Expansion of a generator expression ("y0*y3 - y1*y2", "z2^2 - 1", ...). */
r2c_status r2c_expand(r2c_algebra* a, long long base, const char* expr, int as_text,
                      char** out);

/* z_n = T_n(z) for affine types. */
r2c_status r2c_zn(r2c_algebra* a, long long base, long long n, int as_text, char** out);

/* Positive real roots of height <= bound, as a JSON array of [a1,a2]. */
r2c_status r2c_roots(r2c_algebra* a, long long height_bound, char** out);

/* Denominator vector alpha(m) in the base-1 parametrization. */
r2c_status r2c_denominator_vector(r2c_algebra* a, long long m, long long* a1, long long* a2);

/* Newton polygon of an expression; JSON {"vertices": [...]}, or an SVG
 * document when as_svg is set. */
r2c_status r2c_newton(r2c_algebra* a, long long base, const char* expr, int as_svg,
                      char** out);

/* Newton polygon of a basis element given by its label: kind 0 is the lattice
 * point (a1, a2), kind 1 the imaginary label n*delta with n = a1. */
r2c_status r2c_newton_label(r2c_algebra* a, long long base, int kind, long long a1,
                            long long a2, int as_svg, char** out);

/* Decomposition in the canonical basis (bc <= 4), as Decomposition JSON. */
r2c_status r2c_decompose(r2c_algebra* a, long long base, const char* expr, char** out);

/* Positivity verdict with certificate/witness JSON. *positive is 1 or 0. */
r2c_status r2c_positivity(r2c_algebra* a, long long base, const char* expr, int* positive,
                          char** out);

/* Deformed algebra over Z[q1,q2] (independent of any handle). */
r2c_status r2c_deform_gen(long long base, long long m, int window_cap, int as_text,
                          char** out);
r2c_status r2c_deform_zn(long long base, long long n, int window_cap, int as_text,
                         char** out);

/* Batch verification. options_json may be NULL or e.g.
 * {"b":2,"c":2,"nmax":5,"mmax":4,"count":200}. Returns the report as JSON and
 * the number of failed cases. Unknown suite names give R2C_ERR_INVALID_ARGUMENT. */
r2c_status r2c_verify(const char* suite, const char* options_json, char** report,
                      int* failed);

#ifdef __cplusplus
}
#endif

#endif /* RANK2_CAPI_H */
