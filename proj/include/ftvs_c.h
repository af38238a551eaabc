#ifndef FTVS_C_H
#define FTVS_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FTVS_API __declspec(dllexport)
#else
#define FTVS_API __attribute__((visibility("default")))
#endif

typedef enum ftvs_status {
  FTVS_OK = 0,
  FTVS_ERR_PARSE = 1,        /* malformed JSON */
  FTVS_ERR_CONFIG = 2,       /* schema violation or unresolved name */
  FTVS_ERR_IO = 3,           /* unreadable input, unwritable output */
  FTVS_ERR_ARGUMENT = 4,     /* bad argument to a library call */
  FTVS_ERR_UNKNOWN_DEMO = 5,
  FTVS_ERR_INTERNAL = 6
} ftvs_status;

typedef enum ftvs_format { FTVS_FORMAT_JSON = 0, FTVS_FORMAT_TEXT = 1 } ftvs_format;

typedef struct ftvs_scenario ftvs_scenario;
typedef struct ftvs_report ftvs_report;
typedef struct ftvs_set ftvs_set;

FTVS_API const char* ftvs_version(void);

/* Message for the most recent failed call on this thread; never NULL. */
FTVS_API const char* ftvs_last_error(void);

FTVS_API ftvs_status ftvs_scenario_load_file(const char* path, ftvs_scenario** out);
FTVS_API ftvs_status ftvs_scenario_load_string(const char* json_text, ftvs_scenario** out);
FTVS_API const char* ftvs_scenario_name(const ftvs_scenario* scenario);
FTVS_API void ftvs_scenario_free(ftvs_scenario* scenario);

FTVS_API ftvs_status ftvs_run(const ftvs_scenario* scenario, ftvs_report** out);
FTVS_API ftvs_status ftvs_demo(const char* name, ftvs_report** out);

/* 1 when every check passed, 0 otherwise (including a NULL report). */
FTVS_API int ftvs_report_passed(const ftvs_report* report);
FTVS_API size_t ftvs_report_check_count(const ftvs_report* report);

/* Renders into a newly allocated string released with ftvs_string_free.
 * include_timing only affects the JSON format. */
FTVS_API ftvs_status ftvs_report_render(const ftvs_report* report, ftvs_format format, int include_timing,
                                        char** out);
FTVS_API ftvs_status ftvs_report_write(const ftvs_report* report, ftvs_format format, const char* path);
FTVS_API void ftvs_report_free(ftvs_report* report);
FTVS_API void ftvs_string_free(char* text);

/* Newline-separated names. The returned strings are static. */
FTVS_API const char* ftvs_check_kinds(void);
FTVS_API const char* ftvs_demo_names(void);

/* A single fuzzy set from a domain object and an expression object, both as
 * JSON text in the scenario schema. */
FTVS_API ftvs_status ftvs_set_parse(const char* domain_json, const char* expression_json, ftvs_set** out);
FTVS_API size_t ftvs_set_dimension(const ftvs_set* set);
FTVS_API ftvs_status ftvs_set_eval(const ftvs_set* set, const double* x, size_t n, double* out);
FTVS_API void ftvs_set_free(ftvs_set* set);

#ifdef __cplusplus
}
#endif

#endif /* FTVS_C_H */
