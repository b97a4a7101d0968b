#ifndef UNISUB_CAPI_H
#define UNISUB_CAPI_H

/*
 * C interface of the universal-subspace toolkit. All functionality is
 * reachable through opaque handles and status codes; strings returned
 * through char** outputs are owned by the caller and released with
 * us_string_free. Error details for the calling thread are available
 * from us_last_error().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum us_status {
  US_OK = 0,
  US_E_INVALID_ARGUMENT = 1,
  US_E_VAR_MISMATCH = 2,
  US_E_WRONG_CARDINALITY = 3,
  US_E_DIAGONAL_PAIR = 4,
  US_E_DUPLICATE_PAIR = 5,
  US_E_INDEX_RANGE = 6,
  US_E_FAMILY_MISMATCH = 7,
  US_E_DEGREE_MISMATCH = 8,
  US_E_ZERO_WEIGHT = 9,
  US_E_NO_EXTENSION = 10,
  US_E_BOUND_EXCEEDED = 11,
  US_E_UNSTABLE_COUNT = 12,
  US_E_PRECONDITION = 13,
  US_E_PARSE = 14,
  US_E_INTERNAL = 15,
  US_E_IO = 16
} us_status;

const char* us_status_name(us_status status);

/* Message for the most recent failure on this thread. */
const char* us_last_error(void);

/* Extra payload of the most recent failure: the projected enumeration
 * size for US_E_BOUND_EXCEEDED, the two disagreeing counts for
 * US_E_UNSTABLE_COUNT. Zero otherwise. */
long long us_last_error_payload_a(void);
long long us_last_error_payload_b(void);

void us_string_free(char* text);

const char* us_version(void);

/* ---- patterns ------------------------------------------------------- */

typedef struct us_pattern us_pattern;

/* Parses {"n":..,"pairs":[[i,j],..],"odd":bool?} and validates it. */
us_status us_pattern_from_json(const char* json_text, us_pattern** out);
void us_pattern_free(us_pattern* pattern);

unsigned us_pattern_n(const us_pattern* pattern);
int us_pattern_is_odd(const us_pattern* pattern);
int us_pattern_is_simple(const us_pattern* pattern);
int us_pattern_is_bitriangular(const us_pattern* pattern);

/* ---- certification --------------------------------------------------- */

typedef struct us_certificate us_certificate;

/* family is one of 'A', 'B', 'C', 'D'; B requires an odd pattern. */
us_status us_certify(const us_pattern* pattern, char family, us_certificate** out);
void us_certificate_free(us_certificate* cert);

us_status us_certificate_json(const us_certificate* cert, char** out);
const char* us_certificate_verdict(const us_certificate* cert);
us_status us_certificate_c_i(const us_certificate* cert, char** out_decimal);
/* 1 when the certificate proves universality (nonzero scaled number). */
int us_certificate_positive(const us_certificate* cert);

/* ---- enumeration ------------------------------------------------------ */

typedef struct us_enum_options {
  unsigned n;
  char family;          /* 'A', 'B', 'C', 'D' */
  const char* filter;   /* "none", "simple", "bitriangular"; NULL = none */
  unsigned jobs;        /* 0 -> 1 */
  unsigned bound;       /* 0 -> default 5 */
  int force;
} us_enum_options;

typedef struct us_enum_summary {
  unsigned long long rows;
  unsigned long long simple;
  unsigned long long bitriangular;
  unsigned long long zero_c_i;
} us_enum_summary;

/* Row callback receives "bitmask,simple,bitriangular,C_I,verdict" lines in
 * deterministic order; return nonzero to abort (maps to US_E_IO). */
typedef int (*us_enum_row_fn)(void* user, const char* csv_row);

const char* us_enumeration_csv_header(void);

us_status us_enumerate(const us_enum_options* options, us_enum_row_fn row_fn, void* user,
                       us_enum_summary* summary);

/* ---- numerical verification ------------------------------------------ */

typedef struct us_flag_report us_flag_report;

typedef struct us_verify_options {
  unsigned jobs;                        /* 0 -> 1 */
  unsigned long long psi_samples;       /* 0 -> 1000 */
  double tolerance_override;            /* <= 0 -> keep problem value */
  unsigned long long restarts_override; /* 0 -> keep problem value */
  int has_seed_override;
  unsigned long long seed_override;
} us_verify_options;

/* Problem JSON: {"matrix": [[[re,im],..],..], "pattern": {..},
 * "tolerance"?, "restarts"?, "seed"?}. */
us_status us_verify_json(const char* problem_json, const us_verify_options* options,
                         us_flag_report** out);
void us_flag_report_free(us_flag_report* report);

us_status us_flag_report_json(const us_flag_report* report, char** out);
unsigned long long us_flag_report_count(const us_flag_report* report);
int us_flag_report_stable(const us_flag_report* report);
int us_flag_report_bitriangular(const us_flag_report* report);
/* 1 match, 0 mismatch, -1 not applicable (pattern not bitriangular). */
int us_flag_report_match(const us_flag_report* report);

/* ---- subspace verdicts ------------------------------------------------ */

/* Weights JSON {"group":"A","n":3,"weights":[[1,-1,0],..]} -> verdict JSON. */
us_status us_subspace_verdict_json(const char* weights_json, char** out);

/* ---- selftest ---------------------------------------------------------- */

/* Renders the pass/fail table into *table (caller frees); *all_pass is 1
 * iff every check passed. inject_fault corrupts the fundamental harmonic
 * as a negative control. */
us_status us_selftest(unsigned n_max, int inject_fault, char** table, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
