/* starprod: star products of linear codes over finite fields, exact
 * expectations, Monte Carlo estimates and brute-force oracles.
 *
 * Conventions:
 *  - Every fallible call returns sp_status; SP_OK is 0. On failure the
 *    message is available from sp_last_error() on the same thread until the
 *    next failing call.
 *  - Handles (sp_field, sp_mat, sp_code) are opaque and owned by the caller;
 *    free them with the matching *_free function. Freeing NULL is a no-op.
 *  - Strings returned through char** are heap allocated; release them with
 *    sp_string_free().
 *  - Exact rationals are returned as "num/den" (or "num" for integers).
 *  - threads = 0 means "all available cores"; results never depend on it.
 *  - budget = 0 selects the default enumeration budget of the callee.
 */
#ifndef STARPROD_STARPROD_H
#define STARPROD_STARPROD_H

#include <stddef.h>
#include <stdint.h>

#if defined(STARPROD_BUILDING_LIBRARY)
#define SP_API __attribute__((visibility("default")))
#else
#define SP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_INVALID_ARGUMENT = 1,
  SP_ERR_NOT_PRIME = 2,
  SP_ERR_TOO_LARGE = 3,
  SP_ERR_NO_MODULUS = 4,
  SP_ERR_DIVISION_BY_ZERO = 5,
  SP_ERR_ZERO_CODE = 6,
  SP_ERR_LENGTH_MISMATCH = 7,
  SP_ERR_FIELD_MISMATCH = 8,
  SP_ERR_ZERO_DUAL = 9,
  SP_ERR_BUDGET_EXCEEDED = 10,
  SP_ERR_DEGENERATE_INPUT = 11,
  SP_ERR_NEITHER_MDS = 12,
  SP_ERR_UNCOVERED_CASE = 13,
  SP_ERR_BAD_RANGE = 14,
  SP_ERR_REJECTION_BUDGET = 15,
  SP_ERR_NOT_MONOMIAL = 16,
  SP_ERR_NOT_BINARY = 17,
  SP_ERR_IO = 18,
  SP_ERR_PARSE = 19,
  SP_ERR_INTERNAL = 99
} sp_status;

typedef enum sp_model { SP_MODEL_SYSTEMATIC = 0, SP_MODEL_UNIFORM = 1 } sp_model;

typedef enum sp_quantity {
  SP_QTY_STAR_DIM = 0,
  SP_QTY_KERNEL_SIZE = 1,
  SP_QTY_FULL_DIM = 2,
  SP_QTY_INTERSECTION_DIM = 3
} sp_quantity;

typedef struct sp_field sp_field;
typedef struct sp_mat sp_mat;
typedef struct sp_code sp_code;

/* ---- library ---------------------------------------------------------- */
SP_API const char* sp_version(void);
SP_API const char* sp_status_name(sp_status status);
SP_API const char* sp_last_error(void);
SP_API void sp_string_free(char* s);

/* ---- fields ----------------------------------------------------------- */
SP_API sp_status sp_field_new(uint32_t q, sp_field** out);
SP_API void sp_field_free(sp_field* f);
SP_API uint32_t sp_field_order(const sp_field* f);
SP_API uint32_t sp_field_characteristic(const sp_field* f);
SP_API sp_status sp_field_add(const sp_field* f, uint16_t a, uint16_t b, uint16_t* out);
SP_API sp_status sp_field_mul(const sp_field* f, uint16_t a, uint16_t b, uint16_t* out);
SP_API sp_status sp_field_inv(const sp_field* f, uint16_t a, uint16_t* out);

/* ---- matrices --------------------------------------------------------- */
/* entries: rows*cols row-major values, or NULL for the zero matrix. */
SP_API sp_status sp_mat_new(const sp_field* f, size_t rows, size_t cols, const uint16_t* entries, sp_mat** out);
/* Text format: header "q rows cols", then rows of integers; '#' comments. */
SP_API sp_status sp_mat_parse(const char* text, sp_mat** out);
SP_API sp_status sp_mat_read_file(const char* path, sp_mat** out);
SP_API void sp_mat_free(sp_mat* m);
SP_API size_t sp_mat_rows(const sp_mat* m);
SP_API size_t sp_mat_cols(const sp_mat* m);
SP_API uint32_t sp_mat_field_order(const sp_mat* m);
SP_API sp_status sp_mat_get(const sp_mat* m, size_t r, size_t c, uint16_t* out);
SP_API sp_status sp_mat_rank(const sp_mat* m, size_t* out);
SP_API sp_status sp_mat_rref(const sp_mat* m, sp_mat** out);
SP_API sp_status sp_mat_to_string(const sp_mat* m, char** out);

/* ---- codes ------------------------------------------------------------ */
SP_API sp_status sp_code_from_mat(const sp_mat* generator, sp_code** out);
SP_API sp_status sp_code_full_space(const sp_field* f, size_t n, sp_code** out);
SP_API sp_status sp_code_repetition(const sp_field* f, size_t n, sp_code** out);
SP_API sp_status sp_code_evaluation(const sp_field* f, const uint16_t* points, size_t npoints, size_t k,
                                    sp_code** out);
SP_API void sp_code_free(sp_code* c);
SP_API size_t sp_code_length(const sp_code* c);
SP_API size_t sp_code_dim(const sp_code* c);
SP_API uint32_t sp_code_field_order(const sp_code* c);
/* The canonical (RREF) basis. */
SP_API sp_status sp_code_basis(const sp_code* c, sp_mat** out);
SP_API sp_status sp_code_equal(const sp_code* a, const sp_code* b, int* out);
SP_API sp_status sp_code_star(const sp_code* a, const sp_code* b, sp_code** out);
SP_API sp_status sp_code_dual(const sp_code* c, sp_code** out);
SP_API sp_status sp_code_min_distance(const sp_code* c, uint64_t budget, size_t* out);
SP_API sp_status sp_code_dual_distance(const sp_code* c, uint64_t budget, size_t* out);
SP_API sp_status sp_code_is_mds(const sp_code* c, uint64_t budget, int* out);
SP_API sp_status sp_code_is_degenerate(const sp_code* c, int* out);
SP_API sp_status sp_code_intersection_dim(const sp_code* a, const sp_code* b, size_t* out);
/* *out = 1 when sub is a subcode of c. */
SP_API sp_status sp_code_contains(const sp_code* c, const sp_code* sub, int* out);
SP_API sp_status sp_code_star_bound_dual_distance(const sp_code* a, const sp_code* b, size_t* out);
SP_API sp_status sp_code_star_bound_mds(const sp_code* a, const sp_code* b, size_t* out);
SP_API sp_status sp_code_apply_monomial(const sp_code* c, const sp_mat* monomial, sp_code** out);

/* ---- exact formulas (results as decimal strings / rationals) ---------- */
SP_API sp_status sp_qbinom(long n, long k, uint64_t q, char** out);
SP_API sp_status sp_zero_diag_count(long k1, long k2, long r, uint64_t q, char** out);
SP_API sp_status sp_zero_diag_count_zerocols(long k1, long k2, long r, long l, uint64_t q, char** out);
SP_API sp_status sp_zeros_of_form(long r, long k1, long k2, uint64_t q, char** out);
SP_API sp_status sp_expected_kernel(uint64_t q, size_t n, size_t k1, size_t k2, char** out);
/* bound = k1*k2 - log_q E|ker|; expected_kernel may be NULL. */
SP_API sp_status sp_star_dim_bound(uint64_t q, size_t n, size_t k1, size_t k2, double* bound,
                                   char** expected_kernel);
SP_API sp_status sp_expected_star_dim_mds(uint64_t q, size_t n, size_t k_mds, size_t k_random, char** out);
SP_API sp_status sp_count_subspaces_with_support(uint64_t q, long n, long l, long s, char** out);
SP_API sp_status sp_expected_intersection(uint64_t q, size_t n, size_t k1, size_t k2, char** out);
SP_API sp_status sp_kernel_limit(uint64_t q, size_t n, size_t k1, size_t k2, char** out);
SP_API sp_status sp_full_dim_probability_bound(uint64_t q, long exponent, double* out);
SP_API sp_status sp_kernel_conjecture(uint64_t q, size_t k1, size_t k2, double* out);
/* Decimal rendering of a "num/den" string to the given significant digits. */
SP_API sp_status sp_rational_to_decimal(const char* rational, int digits, char** out);

/* ---- Monte Carlo (JSON outputs) --------------------------------------- */
SP_API sp_status sp_mc_json(sp_quantity quantity, uint64_t q, size_t n, size_t k1, size_t k2, sp_model model,
                            uint64_t samples, uint64_t seed, unsigned threads, char** out);
/* CSV with header "n,k1,k2,q,mc_mean,bound,ratio" and 36 rows. */
SP_API sp_status sp_table1_csv(uint64_t samples, uint64_t seed, unsigned threads, char** out);

/* ---- oracle ----------------------------------------------------------- */
/* Default budget: 2^26 enumerated items. */
SP_API sp_status sp_oracle_expected_kernel(uint64_t q, size_t n, size_t k1, size_t k2, unsigned threads,
                                           uint64_t budget, char** out);
SP_API sp_status sp_oracle_expected_star_dim(uint64_t q, size_t n, size_t k1, size_t k2, sp_model model,
                                             unsigned threads, uint64_t budget, char** out);
SP_API sp_status sp_oracle_expected_star_dim_fixed(const sp_code* c, size_t l, unsigned threads, uint64_t budget,
                                                   char** out);
SP_API sp_status sp_oracle_expected_intersection(uint64_t q, size_t n, size_t k1, size_t k2, unsigned threads,
                                                 uint64_t budget, char** out);
SP_API sp_status sp_oracle_monomial_check(const sp_code* c, const sp_mat* monomial, size_t l, unsigned threads,
                                          uint64_t budget, int* equal, char** json);
/* check: kernel, zerodiag, intersection, mds, support or jensen. The JSON
 * report has per-case results; *all_pass is 1 when every case passed. */
SP_API sp_status sp_oracle_check_json(const char* check, uint64_t qmax, size_t nmax, unsigned threads,
                                      uint64_t budget, int* all_pass, char** json);

/* ---- applications (JSON outputs) -------------------------------------- */
SP_API sp_status sp_apps_pir_json(const sp_code* c, const sp_code* d, uint64_t budget, char** out);
SP_API sp_status sp_apps_sdmm_json(const sp_code* ca, const sp_code* cb, uint64_t budget, char** out);
/* c2 may be NULL. */
SP_API sp_status sp_apps_csst_json(const sp_code* c1, const sp_code* c2, uint64_t budget, char** out);

#ifdef __cplusplus
}
#endif

#endif /* STARPROD_STARPROD_H */
