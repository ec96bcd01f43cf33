#ifndef SYMBC_H
#define SYMBC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SYMBC_API __declspec(dllexport)
#else
#define SYMBC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symbc_status {
  SYMBC_OK = 0,
  SYMBC_ERR_PARSE = 1,     /* form expression or JSON syntax */
  SYMBC_ERR_IO = 2,        /* missing or unreadable file, unknown fixture */
  SYMBC_ERR_ARGUMENT = 3,  /* invalid value, e.g. unknown boundary condition */
  SYMBC_ERR_INTERNAL = 4
} symbc_status;

typedef struct symbc_manifold symbc_manifold;
typedef struct symbc_form symbc_form;
typedef struct symbc_report symbc_report;

typedef enum symbc_variant { SYMBC_PRINTED = 0, SYMBC_CORRECTED = 1 } symbc_variant;

/* Message for the last failing call on this thread; never NULL. */
SYMBC_API const char* symbc_last_error(void);
SYMBC_API const char* symbc_version(void);

SYMBC_API symbc_status symbc_manifold_load(const char* path, symbc_manifold** out);
SYMBC_API symbc_status symbc_manifold_from_json(const char* json, symbc_manifold** out);
SYMBC_API int symbc_manifold_n(const symbc_manifold* m);
SYMBC_API void symbc_manifold_free(symbc_manifold* m);

/* Homogeneous form in 2n variables. */
SYMBC_API symbc_status symbc_form_parse(int n, const char* text, symbc_form** out);
SYMBC_API int symbc_form_degree(const symbc_form* f);
SYMBC_API int symbc_form_is_zero(const symbc_form* f);
/* Canonical text; release with symbc_string_free. */
SYMBC_API char* symbc_form_to_string(const symbc_form* f);
SYMBC_API void symbc_form_free(symbc_form* f);
SYMBC_API void symbc_string_free(char* s);

/* Reports are JSON documents {command, checks: [{name, status, witness?}], tables?}. */
SYMBC_API symbc_status symbc_run_identities(int n, int cases, uint64_t seed, symbc_report** out);
SYMBC_API symbc_status symbc_run_cohomology(const symbc_manifold* m, symbc_report** out);
/* space may be NULL for a boundary-condition check only. */
SYMBC_API symbc_status symbc_run_check_form(const symbc_manifold* m, const char* form, const char* bc,
                                            const char* space, symbc_report** out);
/* fixture is a name or "all"; perturb is NULL or "row:k:delta". */
SYMBC_API symbc_status symbc_run_verify_tables(const char* data_dir, const char* fixture, symbc_variant variant,
                                               const char* perturb, symbc_report** out);
/* k < 0 checks every degree 0..n. */
SYMBC_API symbc_status symbc_run_pairing(const char* data_dir, const char* fixture, int k, symbc_variant variant,
                                         symbc_report** out);

SYMBC_API int symbc_report_passed(const symbc_report* r);
SYMBC_API size_t symbc_report_check_count(const symbc_report* r);
SYMBC_API size_t symbc_report_failure_count(const symbc_report* r);
/* Owned by the report. */
SYMBC_API const char* symbc_report_json(const symbc_report* r);
SYMBC_API void symbc_report_free(symbc_report* r);

#ifdef __cplusplus
}
#endif

#endif
