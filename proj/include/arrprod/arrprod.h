/*
 * C interface to the arrangement product analyzer.
 *
 * Arrangements are opaque handles. Every call returns an arrprod_status; on
 * failure arrprod_last_error() describes the problem for the calling thread.
 * Strings handed out through `char** out` parameters are owned by the caller
 * and must be released with arrprod_string_free().
 */
#ifndef ARRPROD_ARRPROD_H
#define ARRPROD_ARRPROD_H

#include <stddef.h>

#if defined(ARRPROD_BUILDING_LIBRARY)
#define ARRPROD_API __attribute__((visibility("default")))
#else
#define ARRPROD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arrprod_status {
  ARRPROD_OK = 0,
  ARRPROD_ERR_PARSE = 1,
  ARRPROD_ERR_DUPLICATE_LINE = 2,
  ARRPROD_ERR_MIXED_KINDS = 3,
  ARRPROD_ERR_IO = 4,
  ARRPROD_ERR_UNKNOWN_EXAMPLE = 5,
  ARRPROD_ERR_LABEL_NOT_FOUND = 6,
  ARRPROD_ERR_DEGENERATE_WINDOW = 7,
  ARRPROD_ERR_SHARED_LINE = 8,
  ARRPROD_ERR_TOO_SMALL = 9,
  ARRPROD_ERR_TOO_LARGE = 10,
  ARRPROD_ERR_WRONG_KIND = 11,
  ARRPROD_ERR_INVALID_ARGUMENT = 12,
  ARRPROD_ERR_GEOMETRY = 13,
  ARRPROD_ERR_INTERNAL = 14
} arrprod_status;

typedef enum arrprod_format { ARRPROD_FORMAT_TEXT = 0, ARRPROD_FORMAT_JSON = 1 } arrprod_format;

typedef enum arrprod_verdict { ARRPROD_PRODUCT_POSSIBLE = 0, ARRPROD_NOT_A_PRODUCT = 1 } arrprod_verdict;

typedef struct arrprod_arrangement arrprod_arrangement;

/* Thread-local message for the most recent failure; never NULL. */
ARRPROD_API const char* arrprod_last_error(void);
ARRPROD_API const char* arrprod_status_name(arrprod_status status);
ARRPROD_API void arrprod_string_free(char* s);

ARRPROD_API arrprod_status arrprod_arrangement_parse(const char* text, arrprod_arrangement** out);
ARRPROD_API arrprod_status arrprod_arrangement_load(const char* path, arrprod_arrangement** out);
ARRPROD_API arrprod_status arrprod_arrangement_from_example(const char* name, arrprod_arrangement** out);
ARRPROD_API void arrprod_arrangement_free(arrprod_arrangement* arr);

ARRPROD_API int arrprod_arrangement_is_affine(const arrprod_arrangement* arr);
ARRPROD_API size_t arrprod_arrangement_line_count(const arrprod_arrangement* arr);
/* Canonical re-emission in the arrangement file format. */
ARRPROD_API arrprod_status arrprod_arrangement_emit(const arrprod_arrangement* arr, char** out);

/* Full report. Affine inputs are coned with the added line labelled "@inf".
 * min_mult >= 2 filters the listed points. */
ARRPROD_API arrprod_status arrprod_analyze(const arrprod_arrangement* arr, arrprod_format format, int min_mult,
                                           char** out, arrprod_verdict* verdict);

/* found is set to 1 when some decone has a general position partition. */
ARRPROD_API arrprod_status arrprod_gpp(const arrprod_arrangement* arr, char** out, int* found);
ARRPROD_API arrprod_status arrprod_resonance(const arrprod_arrangement* arr, char** out);
/* enumerate > 0 also lists up to that many Fan graphs. */
ARRPROD_API arrprod_status arrprod_fan(const arrprod_arrangement* arr, size_t enumerate, char** out);
ARRPROD_API arrprod_status arrprod_fan_dot(const arrprod_arrangement* arr, char** out);

/* Both arrangements must be affine. holds is set to 1 when every cross pair
 * meets in a distinct transverse double point. */
ARRPROD_API arrprod_status arrprod_oka(const arrprod_arrangement* a1, const arrprod_arrangement* a2, char** out,
                                       int* holds);

/* window holds x0, y0, x1, y1 as exact rationals ("p" or "p/q") or decimals.
 * infinity_label is required for projective input and must be NULL for
 * affine input. */
ARRPROD_API arrprod_status arrprod_render_svg(const arrprod_arrangement* arr, const char* infinity_label,
                                              const char* const window[4], char** out);

ARRPROD_API arrprod_status arrprod_examples_list(char** out);
ARRPROD_API arrprod_status arrprod_example_emit(const char* name, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ARRPROD_ARRPROD_H */
