/* C interface to the symmetry breaking operator library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * function that can fail returns an sbdo_status; on failure the message is
 * available from sbdo_last_error() on the same thread. Strings handed out by
 * the library are released with sbdo_string_free().
 */
#ifndef SBDO_H
#define SBDO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SBDO_API __attribute__((visibility("default")))
#else
#define SBDO_API
#endif

typedef enum sbdo_status {
  SBDO_OK = 0,
  SBDO_ERR_INVALID_ARGUMENT = 1, /* out-of-range n, k, m, options, null pointers */
  SBDO_ERR_PARSE = 2,            /* malformed rational, format or group element */
  SBDO_ERR_DOMAIN = 3,           /* mathematically undefined: not in the dense cell, square root needed */
  SBDO_ERR_INTERNAL = 4          /* invariant violation or unexpected failure */
} sbdo_status;

typedef enum sbdo_format { SBDO_FORMAT_JSON = 0, SBDO_FORMAT_LATEX = 1, SBDO_FORMAT_TEXT = 2 } sbdo_format;

typedef struct sbdo_operator sbdo_operator;
typedef struct sbdo_report sbdo_report;

typedef struct sbdo_verify_options {
  int n_max;          /* 1..4 */
  int m_max;          /* 1..3 */
  const char* checks; /* comma separated check names, NULL or "" for all */
  int jobs;           /* worker threads, >= 1 */
} sbdo_verify_options;

SBDO_API const char* sbdo_version(void);
/* Message of the last failure on the calling thread, "" if none. */
SBDO_API const char* sbdo_last_error(void);
SBDO_API void sbdo_string_free(char* s);

/* Source operator E of dimension n. lambda and mu are rationals ("1/2") or
 * "symbolic"; NULL means symbolic. */
SBDO_API sbdo_status sbdo_emit_source(int n, const char* lambda, const char* mu, sbdo_operator** out);
/* B^(m)_{k; lambda, mu}, 0 <= k <= n, m >= 1. */
SBDO_API sbdo_status sbdo_emit_sbdo(int n, int k, int m, const char* lambda, const char* mu, sbdo_operator** out);
SBDO_API sbdo_status sbdo_operator_render(const sbdo_operator* op, sbdo_format format, char** out);
SBDO_API void sbdo_operator_free(sbdo_operator* op);

SBDO_API sbdo_status sbdo_verify(const sbdo_verify_options* options, sbdo_report** out);
/* JSON (with timings) or text; LaTeX is rejected. */
SBDO_API sbdo_status sbdo_report_render(const sbdo_report* report, sbdo_format format, char** out);
SBDO_API int sbdo_report_all_passed(const sbdo_report* report);
SBDO_API size_t sbdo_report_size(const sbdo_report* report);
SBDO_API void sbdo_report_free(sbdo_report* report);
/* Comma separated list of the check names. */
SBDO_API const char* sbdo_check_names(void);

/* Gelfand-Naimark factors of a group element written as in
 * "nbar(1,2) * m:e1e2 * a(2) * n(0,1)", returned as JSON
 * {"v": [...], "m": "...", "r": "...", "u": [...]}. */
SBDO_API sbdo_status sbdo_gn_factorize(int n, const char* element, char** out);

#ifdef __cplusplus
}
#endif

#endif
