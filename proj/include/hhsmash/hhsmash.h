#ifndef HHSMASH_H
#define HHSMASH_H

/* C interface to the engine. All handles are opaque; every call returns a
 * status code and the message of the last failure on the calling thread is
 * available from hhs_last_error(). */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HHS_BUILDING_LIBRARY)
#    define HHS_API __declspec(dllexport)
#  else
#    define HHS_API __declspec(dllimport)
#  endif
#else
#  define HHS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hhs_status {
    HHS_OK = 0,
    HHS_VERIFY_FAILED = 1, /* the run completed and some check failed */
    HHS_INPUT_ERROR = 2,   /* malformed or invalid scenario, bad argument */
    HHS_INTERNAL = 3       /* unexpected failure inside the engine */
} hhs_status;

typedef enum hhs_mode { HHS_MODE_COMPUTE = 0, HHS_MODE_VERIFY = 1, HHS_MODE_TABLES = 2 } hhs_mode;

typedef enum hhs_format { HHS_FORMAT_JSON = 0, HHS_FORMAT_TEXT = 1 } hhs_format;

typedef struct hhs_scenario hhs_scenario;
typedef struct hhs_report hhs_report;

/* Loading. q may be NULL to keep the document's value; otherwise a rational
 * such as "3" or "-3/2" that replaces it. */
HHS_API hhs_status hhs_scenario_load(const char* path, const char* q, hhs_scenario** out);
HHS_API hhs_status hhs_scenario_parse(const char* json_text, const char* q, hhs_scenario** out);
HHS_API hhs_status hhs_scenario_builtin(const char* name, const char* q, hhs_scenario** out);
HHS_API void hhs_scenario_free(hhs_scenario* s);

HHS_API hhs_status hhs_scenario_set_weight_max(hhs_scenario* s, unsigned weight_max);
HHS_API hhs_status hhs_scenario_set_index_max(hhs_scenario* s, unsigned index_max);

/* Runs a mode. HHS_OK or HHS_VERIFY_FAILED both produce a report. */
HHS_API hhs_status hhs_run(const hhs_scenario* s, hhs_mode mode, unsigned threads, hhs_report** out);
/* Renders a report; the string is owned by the report. */
HHS_API hhs_status hhs_report_render(hhs_report* r, hhs_format format, const char** out);
HHS_API int hhs_report_success(const hhs_report* r);
HHS_API void hhs_report_free(hhs_report* r);

/* Message of the last failed call on this thread, or "" when none. */
HHS_API const char* hhs_last_error(void);
/* Newline-separated names accepted by hhs_scenario_builtin. */
HHS_API const char* hhs_builtin_names(void);

#ifdef __cplusplus
}
#endif

#endif
