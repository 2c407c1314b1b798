/* Copyright 2026 the abelos authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the abelos shared library. All rich operations speak JSON: the
 * caller passes a UTF-8 request document and receives a malloc'd UTF-8
 * response document to be released with abelos_string_free(). The product-
 * code lab additionally exposes an opaque handle so a built code can be
 * measured several times without re-evaluating the sections.
 */

#ifndef ABELOS_H
#define ABELOS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero codes match the CLI exit codes. */
typedef enum abelos_status {
  ABELOS_OK = 0,
  ABELOS_INVALID_INPUT = 2,  /* validation / licensing / parse failure */
  ABELOS_CAP_EXCEEDED = 3,   /* a size or enumeration cap was hit */
  ABELOS_BOUND_VIOLATION = 4,/* measurement falsified a certified bound */
  ABELOS_INTERNAL = 5
} abelos_status;

/* Library version, static storage, do not free. */
const char* abelos_version(void);

/* Thread-local message of the most recent failing call; static storage. */
const char* abelos_last_error(void);

/* Releases any string returned through an out-parameter below. */
void abelos_string_free(char* s);

/* Each call takes a JSON request and produces a JSON reply in *out_json.
 * On failure *out_json is NULL (or an error document) and the status code
 * describes the failure class; abelos_last_error() has the message. */
abelos_status abelos_classify(const char* request_json, char** out_json);
abelos_status abelos_bound(const char* request_json, char** out_json);
abelos_status abelos_count(const char* request_json, char** out_json);
abelos_status abelos_phi_max(const char* request_json, char** out_json);

/* The search sweep emits the versioned CSV instead of JSON. */
abelos_status abelos_search(const char* request_json, char** out_csv);

/* Runs the oracle suite ("all", "lab-only", "bounds-only"); the reply lists
 * one record per criterion. *out_all_pass receives 1 iff every criterion
 * passed (may be NULL). */
abelos_status abelos_verify(const char* suite, char** out_json,
                            int* out_all_pass);

/* ---- product-code lab ---------------------------------------------------- */

typedef struct abelos_code abelos_code; /* opaque */

/* Builds the evaluation code described by the lab request (same schema as
 * abelos_lab). The handle must be released with abelos_code_free(). */
abelos_status abelos_code_build(const char* request_json, abelos_code** out);

/* Measures rank / exact distance; options_json may be NULL or e.g.
 * {"cap": 10000000}. The reply is the full lab report. */
abelos_status abelos_code_measure(const abelos_code* code,
                                  const char* options_json, char** out_json);

/* Generator matrix as JSON (rows of integers, the field element indices). */
abelos_status abelos_code_matrix(const abelos_code* code, char** out_json);

void abelos_code_free(abelos_code* code);

/* One-shot build + measure + bound cross-check, same as the CLI lab verb. */
abelos_status abelos_lab(const char* request_json, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ABELOS_H */
