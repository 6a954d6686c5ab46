/* C interface to the boolrep library.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions return a br_status; on failure br_last_error() describes the
 * problem (per thread, valid until the next call on that thread). Strings
 * returned through char** are owned by the caller and released with
 * br_string_free. Output arguments are left untouched on failure. */
#ifndef BOOLREP_H
#define BOOLREP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BOOLREP_BUILDING)
#    define BR_API __declspec(dllexport)
#  else
#    define BR_API __declspec(dllimport)
#  endif
#else
#  define BR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum br_status {
  BR_OK = 0,
  BR_ERR_INVALID_ARGUMENT = 1,
  BR_ERR_PARSE = 2,
  BR_ERR_INVALID_MATROID = 3, /* empty family, not downward closed, unequal bases, exchange fails */
  BR_ERR_NOT_SIMPLE = 4,
  BR_ERR_ALL_LOOPS = 5,
  BR_ERR_LIMIT = 6, /* ground set or chain count beyond a cap */
  BR_ERR_LABEL_MISMATCH = 7,
  BR_ERR_REDUCTION_FAILED = 8,
  BR_ERR_IO = 9,
  BR_ERR_INTERNAL = 10
} br_status;

typedef enum br_format {
  BR_FORMAT_CSV = 0,
  BR_FORMAT_JSON = 1,
  BR_FORMAT_PRETTY = 2,
  BR_FORMAT_DOT = 3,     /* lattices only */
  BR_FORMAT_TROPICAL = 4 /* representations and boolean matrices: CSV over {0, -inf} */
} br_format;

typedef enum br_lattice_matrix {
  BR_LATTICE_REPRESENTATION = 0, /* a(i,j) = 1 iff l_i is not <= l_j */
  BR_LATTICE_STRUCTURE = 1       /* a(i,j) = 1 iff l_i <= l_j */
} br_lattice_matrix;

typedef enum br_reduction {
  BR_REDUCE_NONE = 0,
  BR_REDUCE_PAPER = 1, /* keep the empty flat and flats of size >= 2 other than E */
  BR_REDUCE_DEDUPE = 2,
  BR_REDUCE_VERIFIED = 3
} br_reduction;

typedef struct br_matroid br_matroid;
typedef struct br_lattice br_lattice;
typedef struct br_repr br_repr;
typedef struct br_matrix br_matrix;

BR_API const char* br_status_name(br_status s);
BR_API const char* br_last_error(void);
BR_API void br_string_free(char* s);

/* {"ground": [...], "bases": [[...]]} or {"ground": [...], "independent": [[...]]} */
BR_API br_status br_matroid_from_json(const char* json, br_matroid** out);
BR_API br_status br_matroid_from_file(const char* path, br_matroid** out);
/* u34, fivept, k4, w3 */
BR_API br_status br_matroid_example(const char* name, br_matroid** out);
BR_API br_status br_matroid_uniform(size_t k, size_t n, br_matroid** out);
BR_API void br_matroid_free(br_matroid* m);
BR_API size_t br_matroid_size(const br_matroid* m);
BR_API size_t br_matroid_rank(const br_matroid* m);
BR_API int br_matroid_is_simple(const br_matroid* m);
BR_API br_status br_matroid_to_json(const br_matroid* m, char** out);
/* Simple matroid of m. map_json (may be NULL) receives {"label": "representative" | null}. */
BR_API br_status br_matroid_simplify(const br_matroid* m, br_matroid** out, char** map_json);

BR_API br_status br_lattice_new(const br_matroid* m, br_lattice** out);
BR_API void br_lattice_free(br_lattice* l);
BR_API size_t br_lattice_size(const br_lattice* l);
BR_API size_t br_lattice_height(const br_lattice* l);
/* Rank of all rows of the lattice representation. */
BR_API br_status br_lattice_nook(const br_lattice* l, size_t* out);
/* CSV and PRETTY print the selected matrix; JSON and DOT ignore `which`. */
BR_API br_status br_lattice_render(const br_lattice* l, br_format fmt, br_lattice_matrix which, char** out);
/* Maximal chains with their partitions, one per line (PRETTY) or as a JSON
 * array. More than `limit` chains gives BR_ERR_LIMIT. */
BR_API br_status br_partitions_render(const br_lattice* l, size_t limit, br_format fmt, char** out, size_t* count);
/* Searches for a maximal chain whose partition has the comma-separated
 * labels as a partial transversal. *found is 0 or 1; partition_json (may be
 * NULL) receives the partition when found. BR_ERR_LIMIT if undecided after
 * `limit` chains. */
BR_API br_status br_transversal_search(const br_lattice* l, const char* labels, size_t limit, int* found,
                                       char** partition_json);

BR_API br_status br_repr_extract(const br_matroid* m, br_repr** out);
/* Applies the reduction and verifies the result. PAPER needs a full
 * (freshly extracted) representation. */
BR_API br_status br_repr_reduce(const br_repr* r, const br_matroid* m, br_reduction mode, br_repr** out);
BR_API void br_repr_free(br_repr* r);
BR_API size_t br_repr_rows(const br_repr* r);
BR_API size_t br_repr_cols(const br_repr* r);
BR_API br_status br_repr_render(const br_repr* r, br_format fmt, char** out);
BR_API br_status br_repr_matrix(const br_repr* r, br_matrix** out);

BR_API br_status br_matrix_from_csv(const char* csv, br_matrix** out);
BR_API br_status br_matrix_from_file(const char* path, br_matrix** out);
BR_API void br_matrix_free(br_matrix* a);
BR_API size_t br_matrix_rows(const br_matrix* a);
BR_API size_t br_matrix_cols(const br_matrix* a);
BR_API br_status br_matrix_rank(const br_matrix* a, size_t* out);
BR_API br_status br_matrix_render(const br_matrix* a, br_format fmt, char** out);

/* Compares column independence of `a` with independence in `m` on every
 * subset (at most 12 elements). *ok is 0 or 1; report (may be NULL) receives
 * a human-readable summary listing any mismatched subsets. */
BR_API br_status br_verify(const br_matrix* a, const br_matroid* m, int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif /* BOOLREP_H */
