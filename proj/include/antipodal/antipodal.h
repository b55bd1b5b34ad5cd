/*
 * C interface to the antipodal library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns an ap_status; on failure ap_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * heap-allocated by the library and must be released with ap_string_free().
 * Reports come back as JSON documents.
 */
#ifndef ANTIPODAL_ANTIPODAL_H
#define ANTIPODAL_ANTIPODAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(ANTIPODAL_BUILDING_LIBRARY)
#define AP_API __attribute__((visibility("default")))
#else
#define AP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ap_status {
  AP_OK = 0,
  AP_ERR_INVALID_PARAMS = 1,
  AP_ERR_OVERLAP = 2,
  AP_ERR_RANGE = 3,
  AP_ERR_DIMENSION_MISMATCH = 4,
  AP_ERR_BAD_CHARACTER = 5,
  AP_ERR_EMPTY_INPUT = 6,
  AP_ERR_REGIME = 7,
  AP_ERR_TOO_LARGE = 8,
  AP_ERR_GROUND_MISMATCH = 9,
  AP_ERR_PRECONDITION = 10,
  AP_ERR_BAD_PAIR = 11,
  AP_ERR_BAD_T = 12,
  AP_ERR_SHAPE_MISMATCH = 13,
  AP_ERR_INVALID_PERMUTATION = 14,
  AP_ERR_PARSE = 15,
  AP_ERR_IO = 16,
  AP_ERR_OVERFLOW = 17,
  AP_ERR_NULL_ARGUMENT = 18,
  AP_ERR_UNKNOWN_KIND = 19,
  AP_ERR_INTERNAL = 100
} ap_status;

typedef enum ap_construction {
  AP_EXAMPLE1 = 1, /* last non-zero coordinate is -1 */
  AP_EXAMPLE2 = 2, /* first coordinate is +1 */
  AP_CIRCLE = 3    /* the n cyclic vectors */
} ap_construction;

typedef struct ap_family ap_family;
typedef struct ap_search_result ap_search_result;

AP_API const char *ap_version(void);
AP_API const char *ap_status_name(ap_status status);
/* Message of the last failure on this thread; "" if none. */
AP_API const char *ap_last_error(void);
AP_API void ap_string_free(char *s);

/* Worker cap for the parallel sweeps; 0 restores the default of 1. */
AP_API ap_status ap_set_threads(int threads);
AP_API int ap_get_threads(void);

/* ---- vectors and counting --------------------------------------------- */

AP_API ap_status ap_params_check(int n, int k, int l);
AP_API ap_status ap_cardinality(int n, int k, int l, uint64_t *out);
AP_API ap_status ap_antipodal_degree(int n, int k, int l, uint64_t *out);
/* Vectors in "+-0" text form. */
AP_API ap_status ap_scalar_product(const char *v, const char *w, int *out);
/* Antipodality within V(n,k,l) where (n,k,l) is read off v. */
AP_API ap_status ap_is_antipodal(const char *v, const char *w, int *out);

/* ---- families --------------------------------------------------------- */

AP_API ap_status ap_family_new(int n, int k, int l, ap_family **out);
AP_API void ap_family_free(ap_family *f);
/* Returns AP_OK and *inserted = 0 for a duplicate. */
AP_API ap_status ap_family_add(ap_family *f, const char *vector, int *inserted);
AP_API ap_status ap_family_enumerate(int n, int k, int l, ap_family **out);
AP_API ap_status ap_family_construct(ap_construction kind, int n, int k, int l,
                                     ap_family **out);
/* Family file text or JSON, detected by content. */
AP_API ap_status ap_family_parse(const char *text, ap_family **out);
AP_API ap_status ap_family_load(const char *path, ap_family **out);
AP_API ap_status ap_family_save(const ap_family *f, const char *path, int json);
AP_API ap_status ap_family_to_text(const ap_family *f, char **out);
AP_API ap_status ap_family_to_json(const ap_family *f, char **out);
AP_API size_t ap_family_size(const ap_family *f);
AP_API ap_status ap_family_params(const ap_family *f, int *n, int *k, int *l);
AP_API ap_status ap_family_member(const ap_family *f, size_t index, char **out);
AP_API ap_status ap_family_contains(const ap_family *f, const char *vector, int *out);
AP_API ap_status ap_family_is_antipodal_free(const ap_family *f, int *out);
/* images[i] is the image of i+1; length must equal n. */
AP_API ap_status ap_family_permute(const ap_family *f, const int *images, size_t length,
                                   ap_family **out);

/* ---- bounds ----------------------------------------------------------- */

AP_API ap_status ap_ekr_bound(int n, int k, uint64_t *out);
AP_API ap_status ap_theorem1_bound(int n, int k, int l, uint64_t *out);
AP_API ap_status ap_theorem2_bound(int n, int k, int l, uint64_t *out);
AP_API ap_status ap_fk1_bound(int n, int k, uint64_t *out);
AP_API ap_status ap_bound_table_json(int n, int k, int l, char **out);

/* ---- set families ----------------------------------------------------- */

/* Report JSON plus the counterexample count. */
AP_API ap_status ap_verify_prop1(int m, int a, int b, char **report,
                                 uint64_t *counterexamples);

/* ---- deletion pipeline ------------------------------------------------ */

/* *passed is 1 when the report lists no violation. */
AP_API ap_status ap_lemma1_check(const ap_family *f, char **report, int *passed);
AP_API ap_status ap_lemma2_check(const ap_family *f, char **report, int *passed);
AP_API ap_status ap_certify_theorem1(const ap_family *f, char **report, int *passed);
/* The surviving family F'. */
AP_API ap_status ap_deletion_procedure(const ap_family *f, ap_family **fprime,
                                       char **report);

/* ---- circle method ---------------------------------------------------- */

AP_API ap_status ap_lemma3_count(const ap_family *f, const int *images, size_t length,
                                 size_t *out);
AP_API ap_status ap_lemma3_sweep(const ap_family *f, int exhaustive, uint64_t samples,
                                 uint64_t seed, char **report, int *passed);
AP_API ap_status ap_double_count(const ap_family *f, int exhaustive, uint64_t samples,
                                 uint64_t seed, char **report, int *passed);
AP_API ap_status ap_certify_theorem2(const ap_family *f, uint64_t samples, uint64_t seed,
                                     char **report, int *passed);
AP_API ap_status ap_max_intersecting_cyclic(int n, int k, int *out);

/* ---- exact search ----------------------------------------------------- */

/* budget_seconds <= 0 selects the default of 60 s. */
AP_API ap_status ap_search_antipodal_free(int n, int k, int l, double budget_seconds,
                                          ap_search_result **out);
AP_API ap_status ap_search_kneser(int n, int k, double budget_seconds,
                                  ap_search_result **out);
AP_API void ap_search_result_free(ap_search_result *r);
AP_API uint64_t ap_search_result_optimum(const ap_search_result *r);
AP_API int ap_search_result_proven(const ap_search_result *r);
AP_API uint64_t ap_search_result_nodes(const ap_search_result *r);
AP_API double ap_search_result_elapsed(const ap_search_result *r);
/* Witness labels, one per line. */
AP_API ap_status ap_search_result_witness_text(const ap_search_result *r, char **out);
/* Only for antipodal-free searches; AP_ERR_PRECONDITION for Kneser runs. */
AP_API ap_status ap_search_result_witness_family(const ap_search_result *r,
                                                 ap_family **out);
AP_API ap_status ap_search_result_json(const ap_search_result *r, int include_elapsed,
                                       char **out);

/* ---- summary table ---------------------------------------------------- */

AP_API ap_status ap_table(int nmax, int kmax, double budget_seconds, int json, char **out);

#ifdef __cplusplus
}
#endif

#endif /* ANTIPODAL_ANTIPODAL_H */
