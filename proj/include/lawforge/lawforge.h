/* lawforge: group laws in the free group on two generators, verified by
 * brute force over small finite groups.
 *
 * C API over the C++ core. All objects are opaque handles; all functions
 * return lf_status. Output strings are heap-allocated and must be released
 * with lf_string_free. On failure, lf_last_error() returns a thread-local
 * message describing the most recent error in the calling thread.
 *
 * Threading: distinct handles may be used from different threads; a single
 * handle caches derived data lazily and must not be shared across threads
 * without external synchronization. The caps setters are serialized.
 *
 * Conventions:
 *  - Words are written as whitespace-separated "gen^exp" tokens over the
 *    generators x and y, e.g. "x^3 y^-1 x"; the identity is "1".
 *  - Group descriptors: C(n), Sym(n), Alt(n), GL(n,q), SL(n,q), GU(n,q),
 *    SU(n,q), Sp(n,q), SOplus(n,q), SOminus(n,q), SOcircle(n,q), a leading
 *    'P' for projective quotients (PSL(2,7), ...), and direct products
 *    joined with 'x' (e.g. "PSL(2,4)xC(3)").
 *    NOTE: for the unitary kinds, q names the FIXED field: SU(3,3) is the
 *    group of 3x3 matrices over GF(9) preserving the Hermitian identity
 *    form. Some texts would call this group SU(3,9).
 *  - Family tags: A1, A2, ..., 2A2, B3, C2, D4, 2D4, 3D4, E6, 2E6, E7, E8,
 *    F4, G2, 2B2, 2F4, 2G2.
 *  - Reports are JSON with sorted keys; censuses also export CSV.
 */
#ifndef LAWFORGE_H
#define LAWFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lf_status {
  LF_OK = 0,
  LF_ERR_PARSE = 1,       /* malformed descriptor, word, or JSON */
  LF_ERR_INVALID = 2,     /* precondition violated */
  LF_ERR_CAP = 3,         /* configured cap exceeded */
  LF_ERR_BUDGET = 4,      /* search or sampling budget exceeded */
  LF_ERR_UNSUPPORTED = 5, /* valid input outside the implemented range */
  LF_ERR_INTERNAL = 6
} lf_status;

typedef struct lf_word_s lf_word;
typedef struct lf_group_s lf_group;

const char* lf_version(void);
const char* lf_last_error(void);
void lf_string_free(char* s);

/* Caps: partial JSON override, e.g. {"pair_group_cap": 2000}. */
lf_status lf_caps_set_json(const char* json);
lf_status lf_caps_get_json(char** out_json);
void lf_caps_reset(void);

/* ---- words ------------------------------------------------------------ */
lf_status lf_word_parse(const char* text, lf_word** out);
/* Free reduction of a letter string over {x, X, y, Y}, X meaning x^-1. */
lf_status lf_word_from_letters(const char* letters, lf_word** out);
lf_status lf_word_format(const lf_word* w, char** out);
lf_word* lf_word_clone(const lf_word* w);
void lf_word_free(lf_word* w);
uint64_t lf_word_length(const lf_word* w);
lf_status lf_word_concat(const lf_word* u, const lf_word* v, lf_word** out);
lf_status lf_word_invert(const lf_word* w, lf_word** out);
lf_status lf_word_power(const lf_word* w, uint64_t e, lf_word** out);
lf_status lf_word_substitute(const lf_word* w, const lf_word* u, const lf_word* v, lf_word** out);
lf_status lf_word_cyclic_reduce(const lf_word* w, lf_word** core, lf_word** conjugator);
lf_status lf_word_cyclic_permutation(const lf_word* w, int64_t k, lf_word** out);

/* ---- groups ----------------------------------------------------------- */
lf_status lf_group_parse(const char* descriptor, lf_group** out);
void lf_group_free(lf_group* g);
lf_status lf_group_order(const lf_group* g, uint64_t* out);
lf_status lf_group_describe(const lf_group* g, char** out);

/* ---- law constructors -> LawRecipe JSON -------------------------------- */
/* recipe names: "psl2-law" {"q"}; "solvable" {"d"}; "max-order" {"m"};
 * "small-field" {"family","n"}; "union" {"words"}; "product" {"words"};
 * "extension" {"wn","wq"}. params_json carries the named parameters;
 * word-list parameters are JSON arrays of word strings. */
lf_status lf_construct(const char* recipe, const char* params_json, char** out_json);

/* ---- verification -> certificate JSON ---------------------------------- */
/* mode: "exhaustive", "sampled", or "generating-pairs". n_samples = 0 picks
 * the configured default for sampled mode. */
lf_status lf_check_law(const lf_group* g, const lf_word* w, const char* mode, uint64_t n_samples,
                       uint64_t seed, int include_timing, char** out_json);
lf_status lf_vanishing_set(const lf_group* g, const lf_word* w, char** out_json);
lf_status lf_shortest_law(const lf_group* g, uint32_t max_length, char** out_json);

/* ---- spectra ------------------------------------------------------------ */
lf_status lf_spectrum(const lf_group* g, char** out_json);
lf_status lf_spectrum_csv(const lf_group* g, char** out_csv);
lf_status lf_density(const lf_group* g, const char* family, uint64_t q, char** out_json);
lf_status lf_tuple_count(uint64_t n, uint32_t d, char** out_json);

/* ---- walks --------------------------------------------------------------- */
lf_status lf_walk_word(uint64_t length, uint64_t seed, char** out_word);
/* n_gens = 0 samples a generating pair from the seed; otherwise gens are
 * element indices in enumeration order. */
lf_status lf_diameter(const lf_group* g, const uint64_t* gens, size_t n_gens, uint64_t seed,
                      char** out_json);
/* walk_length = 0 applies the mixing-bound formula 2|S| diam^2 ln(2|G|). */
lf_status lf_mixing_check(const lf_group* g, const char* family, uint64_t q, uint64_t walk_length,
                          uint64_t trials, uint64_t seed, char** out_json);
/* m < 0 and walk_length < 0 pick the defaults ceil(4 ln|G|), ceil(ln^2|G|). */
lf_status lf_almost_law(const lf_group* g, const char* family, uint64_t q, int64_t m,
                        int64_t walk_length, uint64_t seed, uint32_t attempts, char** out_json);
lf_status lf_coverage_report(const lf_group* g, const char* family, uint64_t q, uint32_t m,
                             uint64_t walk_length, uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LAWFORGE_H */
