/* C API for the polity library: validated societies behind opaque handles,
 * analyses as typed calls or JSON reports. All person indices crossing this
 * boundary are 1-based, matching the file formats. */
#ifndef POLITY_H
#define POLITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define POLITY_API __declspec(dllexport)
#else
#define POLITY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes. */
typedef enum polity_status {
  POLITY_OK = 0,
  POLITY_ERR_VALIDATION = 1, /* bad input: shape, signs, row sums, usage */
  POLITY_ERR_NUMERIC = 2     /* singular blocks, non-convergence, caps hit */
} polity_status;

typedef struct polity_society polity_society;

/* Message and structured code for the most recent error on this thread. */
POLITY_API const char* polity_last_error(void);
POLITY_API const char* polity_last_error_code(void);

/* format: "csv", "json", or NULL/"" to derive from the file extension. */
POLITY_API polity_status polity_society_load(const char* path, const char* format,
                                             polity_society** out);
/* rows: n*n row-major entries. */
POLITY_API polity_status polity_society_from_rows(int n, const double* rows, polity_society** out);
POLITY_API void polity_society_free(polity_society* s);

POLITY_API int polity_society_size(const polity_society* s);
/* 1 when every entry is strictly positive, else 0. */
POLITY_API int polity_society_strict(const polity_society* s);

/* Power vector (length n, sums to 1). Strict societies only. */
POLITY_API polity_status polity_power(const polity_society* s, double tol, double* omega_out);

/* Support matrix for voters x candidates (1-based index arrays); writes
 * n_voters*n_candidates row-major probabilities. voters may be NULL with
 * n_voters = 0 to mean the complement of the candidate set. */
POLITY_API polity_status polity_support(const polity_society* s, const int* voters, int n_voters,
                                        const int* candidates, int n_candidates, double* d_out);

/* Full JSON reports, mirroring the CLI. options_json may be NULL or "{}";
 * recognized keys: tol, threshold, candidates, voters, trials, seed, threads,
 * mode ("joint"/"marginal"), enum_limit. Free results with
 * polity_string_free. */
POLITY_API polity_status polity_report(const polity_society* s, const char* command,
                                       const char* options_json, char** report_json_out);

/* Human-readable one-liner for a report produced by polity_report. */
POLITY_API polity_status polity_summary(const char* report_json, char** summary_out);

/* Archetype generator. options_json keys: archetype ("father", "tree",
 * "equality", "near-identity"), size, s, eps, seed, parents, leader_row.
 * format: "csv" or "json". */
POLITY_API polity_status polity_gen(const char* options_json, const char* format,
                                    char** matrix_text_out);

POLITY_API void polity_string_free(char* s);

POLITY_API const char* polity_version(void);

#ifdef __cplusplus
}
#endif

#endif /* POLITY_H */
