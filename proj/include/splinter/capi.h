/* C interface to the splinter workbench.  All objects are opaque handles;
 * functions return status codes and never throw across the boundary.
 * Returned strings and reports must be released with the matching
 * splinter_*_release call.  Error details for the calling thread are
 * available from splinter_last_error(). */

#ifndef SPLINTER_CAPI_H
#define SPLINTER_CAPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum splinter_status {
  SPLINTER_OK = 0,
  /* A scenario ran but a pinned expectation did not match. */
  SPLINTER_MISMATCH = 1,
  /* Invalid scenario name, parameter, or input. */
  SPLINTER_INVALID = 2,
  /* Budget exhaustion or an internal failure. */
  SPLINTER_INTERNAL = 3
} splinter_status;

typedef struct splinter_report splinter_report;

const char* splinter_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* splinter_last_error(void);

/* Runs a scenario with the given parameters (parallel key/value arrays of
 * length nparams).  On success stores a report handle in *out.  When
 * cache_dir is non-NULL and use_cache is nonzero, a cache hit short-circuits
 * the run and a miss stores the fresh result; an empty cache_dir string
 * selects the default directory.  A run whose embedded expectations fail
 * still stores the report and returns SPLINTER_MISMATCH. */
splinter_status splinter_run_scenario(const char* name, const char* const* keys,
                                      const char* const* values, size_t nparams,
                                      const char* cache_dir, int use_cache,
                                      splinter_report** out);

/* Canonical machine serialization; owned by the report handle. */
const char* splinter_report_machine(const splinter_report* report);

/* Human-readable rendering; caller releases with splinter_string_release. */
splinter_status splinter_report_table(const splinter_report* report, char** out);

/* 1 when every embedded expectation matched, else 0. */
int splinter_report_expectations_ok(const splinter_report* report);

void splinter_report_release(splinter_report* report);

/* Registry listing (one scenario per block, with parameter schemas); filter
 * may be NULL.  Caller releases the string. */
splinter_status splinter_list_scenarios(const char* filter, char** out);

/* Cache operations keyed by scenario name plus canonicalized parameters.
 * splinter_cache_get stores the cached bytes in *out (NULL on a miss). */
splinter_status splinter_cache_get(const char* cache_dir, const char* name,
                                   const char* const* keys, const char* const* values,
                                   size_t nparams, char** out);
splinter_status splinter_cache_clear(const char* cache_dir);

void splinter_string_release(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SPLINTER_CAPI_H */
