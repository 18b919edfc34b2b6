#ifndef SOGC_H
#define SOGC_H

/* C interface to the sogc library. Objects are opaque handles released with
 * the matching *_free function. Every fallible function returns a status
 * code; on failure sogc_last_error() describes the problem for the calling
 * thread. Strings returned through char** are owned by the caller and must be
 * released with sogc_free_string. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SOGC_API __declspec(dllexport)
#else
#define SOGC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sogc_status {
  SOGC_OK = 0,
  SOGC_ERR_DIMENSION = 1,
  SOGC_ERR_PARAMETER = 2,
  SOGC_ERR_PRECONDITION = 3,
  SOGC_ERR_VALIDATION = 4,
  SOGC_ERR_RANK = 5,
  SOGC_ERR_INDEX = 6,
  SOGC_ERR_MEMBERSHIP = 7,
  SOGC_ERR_LOOKUP = 8,
  SOGC_ERR_INFEASIBLE = 9,
  SOGC_ERR_CONSTRUCTION = 10,
  SOGC_ERR_IO = 11,
  SOGC_ERR_NULL_ARGUMENT = 12,
  SOGC_ERR_INTERNAL = 13
} sogc_status;

typedef enum sogc_verdict {
  SOGC_NONEXISTENT = 0,
  SOGC_EXISTS_WITNESS = 1,
  SOGC_INCONCLUSIVE = 2
} sogc_verdict;

typedef enum sogc_family {
  SOGC_FAMILY_GRIESMER = 0,
  SOGC_FAMILY_SHRINK = 1,
  SOGC_FAMILY_BOTH = 2
} sogc_family;

typedef struct sogc_code sogc_code;
typedef struct sogc_bounds sogc_bounds;
typedef struct sogc_cert sogc_cert;

SOGC_API const char* sogc_version(void);
/* Message of the last failed call on this thread; "" if none. */
SOGC_API const char* sogc_last_error(void);
SOGC_API void sogc_free_string(char* s);
/* Worker threads for enumeration, tables and search; 0 means all cores. */
SOGC_API void sogc_set_threads(unsigned threads);

/* Codes. Text uses the code file format: "n k", k rows of 0/1, '#' comments. */
SOGC_API sogc_status sogc_code_from_text(const char* text, sogc_code** out);
SOGC_API sogc_status sogc_code_load(const char* path, sogc_code** out);
SOGC_API sogc_status sogc_code_save(const sogc_code* code, const char* path, const char* comment);
SOGC_API sogc_status sogc_code_to_text(const sogc_code* code, char** out);
SOGC_API void sogc_code_free(sogc_code* code);

SOGC_API sogc_status sogc_code_params(const sogc_code* code, size_t* n, size_t* k, size_t* d);
SOGC_API sogc_status sogc_code_is_self_orthogonal(const sogc_code* code, int* out);
SOGC_API sogc_status sogc_code_is_doubly_even(const sogc_code* code, int* out);
SOGC_API sogc_status sogc_code_is_griesmer(const sogc_code* code, int* out);
/* counts[w] for w = 0..len-1 (len is normally n + 1). */
SOGC_API sogc_status sogc_code_weight_counts(const sogc_code* code, uint64_t* counts, size_t len);
/* Minimum-weight codeword as a 0/1 string. */
SOGC_API sogc_status sogc_code_min_weight_codeword(const sogc_code* code, char** out);
/* TSV summary: code, n, k, d, so, doubly_even, griesmer. */
SOGC_API sogc_status sogc_code_summary_tsv(const sogc_code* code, char** out);
SOGC_API sogc_status sogc_code_weight_distribution_tsv(const sogc_code* code, char** out);

/* Constructions. */
SOGC_API sogc_status sogc_simplex(size_t k, sogc_code** out);
SOGC_API sogc_status sogc_reed_muller_1(size_t k, sogc_code** out);
SOGC_API sogc_status sogc_solomon_stiffler(size_t k, size_t s, const size_t* u, size_t p, sogc_code** out);
SOGC_API sogc_status sogc_belov(size_t k, size_t s, const size_t* u_seq, size_t t, size_t u, sogc_code** out);
SOGC_API sogc_status sogc_paper_code(const char* name, sogc_code** out);

/* Transformations. For sogc_residual a NULL codeword selects the
 * minimum-weight codeword; positions for sogc_puncture are 1-based. The
 * matrix for sogc_juxtapose is code-file text and may be rank-deficient. */
SOGC_API sogc_status sogc_residual(const sogc_code* code, const char* codeword, sogc_code** out);
SOGC_API sogc_status sogc_puncture(const sogc_code* code, const size_t* positions, size_t count, sogc_code** out);
SOGC_API sogc_status sogc_juxtapose(const sogc_code* c0, const char* matrix_text, sogc_code** out);
SOGC_API sogc_status sogc_extend_rm(const sogc_code* code, size_t m, sogc_code** out);
SOGC_API sogc_status sogc_add_simplex_copies(const sogc_code* code, size_t m, sogc_code** out);
SOGC_API sogc_status sogc_shrink_by_duplicate(const sogc_code* code, sogc_code** out);

/* Bounds. */
SOGC_API size_t sogc_griesmer_sum(size_t k, size_t d);
SOGC_API size_t sogc_griesmer_max_d(size_t n, size_t k);
SOGC_API sogc_status sogc_asymptotic_threshold(size_t k, size_t* m_min);
/* Either path may be NULL: no table entries / no curated refutations. */
SOGC_API sogc_status sogc_bounds_load(const char* bounds_path, const char* refutations_path, sogc_bounds** out);
SOGC_API void sogc_bounds_free(sogc_bounds* bounds);
/* Upper bound on d_so(n,k); rules receives one line per applied rule. */
SOGC_API sogc_status sogc_dso_upper(const sogc_bounds* bounds, size_t n, size_t k, size_t* d, char** rules);

/* Proofs and certificates. */
SOGC_API sogc_status sogc_prove(const sogc_bounds* bounds, size_t n, size_t k, size_t d, sogc_cert** out);
/* max_nodes 0 means unlimited; threads 0 uses the library default. */
SOGC_API sogc_status sogc_search(size_t n, size_t k, size_t d, uint64_t max_nodes, size_t split_depth,
                                 unsigned threads, sogc_cert** out);
SOGC_API sogc_status sogc_cert_verdict(const sogc_cert* cert, sogc_verdict* out);
SOGC_API sogc_status sogc_cert_to_json(const sogc_cert* cert, char** out);
SOGC_API sogc_status sogc_cert_from_json(const char* json, sogc_cert** out);
/* ok = 1 if every step replays. A malformed certificate is an error. */
SOGC_API sogc_status sogc_cert_verify(const sogc_cert* cert, const sogc_bounds* bounds, int* ok);
/* The witness of an exists-witness certificate; SOGC_ERR_LOOKUP otherwise. */
SOGC_API sogc_status sogc_cert_witness(const sogc_cert* cert, sogc_code** out);
SOGC_API void sogc_cert_free(sogc_cert* cert);

/* Tables, as TSV with a header line. */
SOGC_API sogc_status sogc_griesmer_catalog_tsv(size_t k, size_t s, char** out);
/* m < 0 gives the symbolic form. */
SOGC_API sogc_status sogc_asymptotic_tsv(size_t k, sogc_family family, long m, char** out);
/* code_paths lists code files or directories of *.code files. Codes of
 * dimension k are used as they are, SO codes of dimension k-1 are lifted
 * with one Reed-Muller extension, everything else is ignored. A code of
 * dimension k that is not SO is a validation error. */
SOGC_API sogc_status sogc_dso_table_tsv(const sogc_bounds* bounds, size_t k, size_t n_first, size_t n_last,
                                        const char* const* code_paths, size_t path_count, int provenance, char** out);

#ifdef __cplusplus
}
#endif

#endif
