/* SPDX-License-Identifier: Apache-2.0 */
#ifndef EULERQ_EULERQ_H
#define EULERQ_EULERQ_H

/*
 * C interface to the eulerq library.
 *
 * Usage:
 *   eulerq_config* cfg;
 *   eulerq_config_create("table", &cfg);
 *   eulerq_config_set(cfg, "family", "TypeB");
 *   eulerq_report* rep;
 *   int st = eulerq_run(cfg, &rep);
 *   puts(eulerq_report_json(rep));
 *   eulerq_report_destroy(rep);
 *   eulerq_config_destroy(cfg);
 *
 * Strings returned by the library are owned by the handle they came from and
 * stay valid until that handle is destroyed.
 */

#if defined(_WIN32)
#  if defined(EULERQ_BUILDING)
#    define EULERQ_API __declspec(dllexport)
#  else
#    define EULERQ_API __declspec(dllimport)
#  endif
#else
#  define EULERQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eulerq_status {
  EULERQ_OK = 0,
  EULERQ_CHECK_FAILED = 1, /* run completed, the checked property does not hold */
  EULERQ_USAGE_ERROR = 2,  /* bad command, option or value */
  EULERQ_INTERNAL_ERROR = 3
} eulerq_status;

typedef struct eulerq_config eulerq_config;
typedef struct eulerq_report eulerq_report;

EULERQ_API const char* eulerq_version(void);

/* command: table, cfrac, prodmat, check, conjecture, invert-moments, selftest */
EULERQ_API eulerq_status eulerq_config_create(const char* command, eulerq_config** out);
/* key uses the CLI spelling without dashes, e.g. "family", "nmax", "inject-fault". */
EULERQ_API eulerq_status eulerq_config_set(eulerq_config* cfg, const char* key, const char* value);
EULERQ_API void eulerq_config_destroy(eulerq_config* cfg);

/* On EULERQ_OK or EULERQ_CHECK_FAILED *out receives a report; otherwise *out is NULL. */
EULERQ_API eulerq_status eulerq_run(const eulerq_config* cfg, eulerq_report** out);
EULERQ_API const char* eulerq_report_json(const eulerq_report* rep);
EULERQ_API const char* eulerq_report_text(const eulerq_report* rep);
EULERQ_API eulerq_status eulerq_report_status(const eulerq_report* rep);
EULERQ_API void eulerq_report_destroy(eulerq_report* rep);

/* Message for the most recent failure on the calling thread, "" if none. */
EULERQ_API const char* eulerq_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* EULERQ_EULERQ_H */
