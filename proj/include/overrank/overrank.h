#ifndef OVERRANK_OVERRANK_H
#define OVERRANK_OVERRANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(OVERRANK_BUILDING_LIBRARY)
#define OVR_API __attribute__((visibility("default")))
#else
#define OVR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ovr_status {
  OVR_OK = 0,
  OVR_INVALID_ARGUMENT = 1,
  OVR_ZERO_LEADING_TERM = 2,
  OVR_BEYOND_TRUNCATION = 3,
  OVR_NEGATIVE_EXPONENT = 4,
  OVR_ZERO_EXPONENT = 5,
  OVR_POLE_HIT = 6,
  OVR_CAP_EXCEEDED = 7,
  OVR_UNKNOWN_IDENTITY = 8,
  OVR_NOT_POWER_SERIES = 9,
  OVR_INSUFFICIENT_PRECISION = 10,
  OVR_NULL_ARGUMENT = 100,
  OVR_INTERNAL = 101
} ovr_status;

typedef enum ovr_format { OVR_FORMAT_TEXT = 0, OVR_FORMAT_JSON = 1, OVR_FORMAT_CSV = 2 } ovr_format;

typedef struct ovr_series ovr_series;
typedef struct ovr_report ovr_report;
typedef struct ovr_suite ovr_suite;

/* Message for the most recent failure on the calling thread; "" if none. */
OVR_API const char* ovr_last_error(void);

/* Every char* handed out by the library is released with this. */
OVR_API void ovr_string_free(char* s);

/* pbar | nbar:s,m | rankdiff-oracle:ell,s,t,d | rankdiff-formula:ell,s,t,d | sbar:b,ell */
OVR_API ovr_status ovr_series_named(const char* name, int64_t order, ovr_series** out);
OVR_API void ovr_series_free(ovr_series* s);
OVR_API int64_t ovr_series_min_exp(const ovr_series* s);
OVR_API int64_t ovr_series_order(const ovr_series* s);
/* "num/den"; exponents at or beyond the order give OVR_BEYOND_TRUNCATION. */
OVR_API ovr_status ovr_series_coefficient(const ovr_series* s, int64_t exp, char** fraction);
OVR_API ovr_status ovr_series_csv(const ovr_series* s, char** out);

OVR_API size_t ovr_identity_count(void);
/* One "id<TAB>tier<TAB>default_order<TAB>anchor" line per identity, sorted by id. */
OVR_API ovr_status ovr_list(char** out);

/* A mismatch is a report with pass == 0, not an error status. */
OVR_API ovr_status ovr_verify(const char* id, int64_t order, int timings, ovr_report** out);
OVR_API int ovr_report_pass(const ovr_report* r);
OVR_API ovr_status ovr_report_render(const ovr_report* r, ovr_format format, char** out);
OVR_API void ovr_report_free(ovr_report* r);

OVR_API ovr_status ovr_suite_run(double order_scale, int jobs, int timings, ovr_suite** out);
OVR_API size_t ovr_suite_size(const ovr_suite* s);
OVR_API size_t ovr_suite_failures(const ovr_suite* s);
OVR_API ovr_status ovr_suite_render(const ovr_suite* s, ovr_format format, char** out);
OVR_API void ovr_suite_free(ovr_suite* s);

/* CSV of Nbar(s, mod, n) from enumeration for 0 <= n <= max_n. */
OVR_API ovr_status ovr_count_table(int max_n, int mod, char** out);

#ifdef __cplusplus
}
#endif

#endif
