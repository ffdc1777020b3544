/*
 * C interface to the ordered semigroup toolkit.
 *
 * Structures are opaque handles created by osg_parse()/osg_load() and
 * released with osg_free(). Every function returns an osg_status; on
 * failure, osg_last_error() describes the problem for the calling thread.
 * Strings returned through `char** out` parameters are heap-allocated and
 * owned by the caller, who releases them with osg_string_free().
 */

#ifndef OSG_OSG_H
#define OSG_OSG_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(OSG_BUILDING_LIBRARY)
#    define OSG_API __declspec(dllexport)
#  else
#    define OSG_API __declspec(dllimport)
#  endif
#else
#  define OSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct osg_semigroup osg_semigroup;

typedef enum osg_status {
  OSG_OK = 0,
  OSG_ERR_INVALID_ARGUMENT = 1,
  OSG_ERR_INVALID_STRUCTURE = 2, /* parse or axiom diagnostics */
  OSG_ERR_IO = 3,
  OSG_ERR_BOUND = 4,             /* a size bound was exceeded */
  OSG_ERR_EXPRESSION = 5,        /* unknown predicate or bad syntax */
  OSG_ERR_INTERNAL = 6
} osg_status;

typedef enum osg_format { OSG_FORMAT_TEXT = 0, OSG_FORMAT_JSON = 1 } osg_format;

typedef enum osg_idempotent_reading {
  OSG_IDEMPOTENT_LEQ = 0, /* e <= e^2 */
  OSG_IDEMPOTENT_EQ = 1   /* e = e^2 */
} osg_idempotent_reading;

typedef enum osg_quantifier { OSG_FORALL = 0, OSG_EXISTS = 1 } osg_quantifier;

typedef struct osg_options {
  osg_idempotent_reading idempotents;
  osg_quantifier linv_quantifier;
} osg_options;

typedef struct osg_enumerate_options {
  size_t n;
  int up_to_iso;     /* nonzero: one structure per isomorphism class */
  int allow_large;   /* nonzero: permit n = 5 */
  size_t threads;    /* 0 or 1: sequential */
  const char* emit_dir; /* NULL: count only */
  const char* filter;   /* NULL, or a search expression restricting the corpus */
} osg_enumerate_options;

OSG_API const char* osg_version(void);
OSG_API const char* osg_status_string(osg_status status);
/* Message for the last failure on this thread; empty if none. */
OSG_API const char* osg_last_error(void);
OSG_API void osg_string_free(char* s);

/* Default options: e <= e^2 reading, for-all quantifier. */
OSG_API osg_options osg_default_options(void);

/* Parse an osg v1 document. On OSG_ERR_INVALID_STRUCTURE, *diagnostics (if
 * non-NULL) receives one diagnostic per line. */
OSG_API osg_status osg_parse(const char* text, osg_semigroup** out, char** diagnostics);
OSG_API osg_status osg_load(const char* path, osg_semigroup** out, char** diagnostics);
OSG_API void osg_free(osg_semigroup* s);

OSG_API size_t osg_size(const osg_semigroup* s);
OSG_API const char* osg_element_name(const osg_semigroup* s, size_t index);
/* Product of two elements by index; SIZE_MAX on bad arguments. */
OSG_API size_t osg_product(const osg_semigroup* s, size_t a, size_t b);
OSG_API int osg_leq(const osg_semigroup* s, size_t a, size_t b);

OSG_API osg_status osg_serialize(const osg_semigroup* s, char** out);

/* Full classification, Green's relations and theorem report. */
OSG_API osg_status osg_analyze(const osg_semigroup* s, const char* name,
                               const osg_options* options, osg_format format, char** out);

/* Theorem report; *mismatch is set to 1 if any theorem mismatches. */
OSG_API osg_status osg_theorems(const osg_semigroup* s, const char* name,
                                const osg_options* options, osg_format format, char** out,
                                int* mismatch);

/* relation is one of 'L', 'R', 'J', 'H'. */
OSG_API osg_status osg_green(const osg_semigroup* s, char relation, osg_format format,
                             char** out);

/* Classification predicate by name (see osg_search); *holds is 1 or 0,
 * not-applicable counts as 0. */
OSG_API osg_status osg_predicate(const osg_semigroup* s, const char* name, int* holds);

/* Power semigroup of a plain (discrete-order) semigroup. */
OSG_API osg_status osg_power(const osg_semigroup* s, osg_semigroup** out);

/* Counts (and optionally writes) the corpus of order n. *out receives
 * "tables: T, ordered: O, classes: C" (plus "matching: M" with a filter)
 * followed by the manifest of the (filtered) corpus. */
OSG_API osg_status osg_enumerate(const osg_enumerate_options* options, char** out);

/* Structures of order n satisfying `expression`, as osg v1 documents
 * separated by blank lines. limit 0 means no limit. */
OSG_API osg_status osg_search(size_t n, const char* expression, size_t limit, int up_to_iso,
                              size_t threads, char** out, size_t* count);

/* Theorem suite over every ordered semigroup of order 1..n_max. Mismatching
 * structures are written to emit_dir when it is non-NULL. */
OSG_API osg_status osg_corpus_verify(size_t n_max, const osg_options* options, size_t threads,
                                     const char* emit_dir, osg_format format, char** out,
                                     size_t* mismatches);

#ifdef __cplusplus
}
#endif

#endif /* OSG_OSG_H */
