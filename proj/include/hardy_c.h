/*
 * C interface to the hardy library.
 *
 * All objects are opaque handles released with the matching *_free
 * function. Functions that can fail return an hc_status; on failure the
 * message of the most recent error on the calling thread is available from
 * hc_last_error() until the next failing call on that thread.
 *
 * Complex numbers cross the boundary as interleaved (re, im) double pairs.
 * Matrix coefficients are stored column-major.
 */
#ifndef HARDY_C_H
#define HARDY_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HARDY_BUILDING_LIBRARY)
#    define HC_API __declspec(dllexport)
#  else
#    define HC_API __declspec(dllimport)
#  endif
#else
#  define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_INVALID_ARGUMENT = 1,
    HC_DIMENSION_MISMATCH = 2,
    HC_INFEASIBLE = 3,
    HC_DEGENERATE = 4,
    HC_UNCONSTRAINED = 5,
    HC_NOT_CONVERGENT = 6,
    HC_SINGULAR = 7,
    HC_TRUNCATION_TOO_SMALL = 8,
    HC_OUT_OF_MEMORY = 9,
    HC_INTERNAL_ERROR = 10
} hc_status;

/* Stable lower-case name, e.g. "infeasible". Never NULL. */
HC_API const char* hc_status_name(hc_status status);

/* Message of the last failure on this thread, or "" when there was none. */
HC_API const char* hc_last_error(void);

HC_API const char* hc_version(void);

/* ---- run configuration ------------------------------------------------ */

typedef struct hc_config {
    size_t truncation;  /* N >= 16 */
    double tol;         /* > 0 */
    int samples;        /* boundary samples for certificates, >= 8 */
    double radius;      /* certification radius in (0, 1) */
    uint64_t seed;
} hc_config;

HC_API hc_config hc_config_default(void);

/* ---- command results -------------------------------------------------- */

typedef struct hc_result hc_result;

/* Process exit code of the command: 0 success, 1 verification failure,
 * 2 input error, 3 infeasible problem. */
HC_API int hc_result_exit_code(const hc_result* result);
/* Report as JSON (17 significant digits). Owned by the result. */
HC_API const char* hc_result_json(const hc_result* result);
/* One-line summary. Owned by the result. */
HC_API const char* hc_result_message(const hc_result* result);
HC_API void hc_result_free(hc_result* result);

/*
 * Command entry points. JSON arguments are UTF-8 documents; optional ones
 * may be NULL. On success *out receives a result even when the command
 * itself reports a non-zero exit code; input and solver errors are
 * reported inside the result as well. A non-OK status means the call could
 * not run at all (NULL out pointer, allocation failure).
 */
HC_API hc_status hc_cmd_decompose(const char* series_json, const char* blaschke_json, const hc_config* config,
                                  hc_result** out);

/* route: "direct" or "schur" (NULL means direct). cauchy_rows selects the
 * Cauchy rows instead of the orthonormal basis for derivative problems. */
HC_API hc_status hc_cmd_interpolate(const char* problem_json, const char* parameter_json, const char* route,
                                    int cauchy_rows, const hc_config* config, hc_result** out);

HC_API hc_status hc_cmd_np(const char* data_json, const char* parameter_json, const hc_config* config,
                           hc_result** out);

HC_API hc_status hc_cmd_leech(const char* series_json, const char* blaschke_json, const hc_config* config,
                              hc_result** out);

/* suite: cuntz, leech, dbr, interp or all. */
HC_API hc_status hc_cmd_verify(const char* suite, const hc_config* config, hc_result** out);

/* grid_points <= 0 and grid_radius <= 0 select the defaults (32, 0.95). */
HC_API hc_status hc_cmd_dbr_check(const char* blaschke_json, const char* schur_json, int grid_points,
                                  double grid_radius, const hc_config* config, hc_result** out);

/* ---- truncated power series ------------------------------------------- */

typedef struct hc_series hc_series;

/* p x q series with n zero coefficients. */
HC_API hc_status hc_series_new(size_t rows, size_t cols, size_t n, hc_series** out);
HC_API hc_status hc_series_from_json(const char* json, hc_series** out);
/* Caller frees the returned string with hc_string_free. */
HC_API hc_status hc_series_to_json(const hc_series* series, char** out);
HC_API void hc_series_free(hc_series* series);

HC_API size_t hc_series_rows(const hc_series* series);
HC_API size_t hc_series_cols(const hc_series* series);
HC_API size_t hc_series_size(const hc_series* series);

/* Reads or writes coefficient k as rows*cols interleaved pairs. */
HC_API hc_status hc_series_get_coeff(const hc_series* series, size_t k, double* values);
HC_API hc_status hc_series_set_coeff(hc_series* series, size_t k, const double* values);

/* f(z) into rows*cols interleaved pairs. */
HC_API hc_status hc_series_eval(const hc_series* series, double re, double im, double* values);
/* trace [f, f]. */
HC_API hc_status hc_series_norm2(const hc_series* series, double* out);

/* ---- Blaschke products and model-space bases --------------------------- */

typedef struct hc_basis hc_basis;

/* Orthonormal basis of the model space of the Blaschke product with the
 * given zeros (interleaved pairs, repeated for multiplicity). */
HC_API hc_status hc_basis_new(const double* zeros, size_t count, hc_basis** out);
HC_API hc_status hc_basis_from_json(const char* blaschke_json, hc_basis** out);
HC_API void hc_basis_free(hc_basis* basis);

HC_API size_t hc_basis_dimension(const hc_basis* basis);
/* b(z). */
HC_API hc_status hc_basis_blaschke_eval(const hc_basis* basis, double re, double im, double* value);
/* (e_1(z), ..., e_M(z)) into M interleaved pairs. */
HC_API hc_status hc_basis_row(const hc_basis* basis, double re, double im, double* values);

/* Splits f into M parts (parts has room for M handles, each freed by the
 * caller). */
HC_API hc_status hc_analyze(const hc_series* f, const hc_basis* basis, hc_series** parts);
/* sum_j e_j (f_j o b), truncated to n coefficients. */
HC_API hc_status hc_synthesize(const hc_basis* basis, hc_series* const* parts, size_t n, hc_series** out);

/* Worst Cuntz-relation residual on the monomials up to degree deg. */
HC_API hc_status hc_verify_cuntz(const hc_basis* basis, size_t n, int deg, double* worst);

HC_API void hc_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif
