#ifndef KNOTCG_KNOTCG_H
#define KNOTCG_KNOTCG_H

/*
 * C interface to the knotcg library: Seifert matrices behind opaque handles,
 * every report returned as a JSON string. All functions are reentrant; the
 * last error message is kept per thread.
 *
 * Strings returned through `char** json_out` are owned by the caller and must
 * be released with kcg_string_free. Handles are released with
 * kcg_seifert_free. Output parameters are left untouched on failure, except
 * for kcg_verify_paper which also fills `json_out` on KCG_VERIFICATION_FAILED.
 */

#include <stddef.h>

#if defined(_WIN32)
#  define KCG_API __declspec(dllexport)
#else
#  define KCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 0-6 are also the exit codes of the knotcg command-line tool. */
typedef enum kcg_status {
  KCG_OK = 0,
  KCG_USAGE = 1,
  KCG_SCHEMA_ERROR = 2,
  KCG_INVALID_SEIFERT = 3,
  KCG_DEGENERATE_FORM = 4,
  KCG_NOT_P_ELEMENTARY = 5,
  KCG_VERIFICATION_FAILED = 6,
  KCG_INVALID_ARGUMENT = 7,
  KCG_TOO_LARGE = 8,
  KCG_INTERNAL_ERROR = 9
} kcg_status;

typedef struct kcg_seifert kcg_seifert;

KCG_API const char* kcg_version(void);
KCG_API const char* kcg_status_name(kcg_status status);
/* Message of the last failing call on this thread, or "" if none. */
KCG_API const char* kcg_last_error(void);
KCG_API void kcg_string_free(char* s);

/* {"label": string?, "matrix": [[int,...],...]} */
KCG_API kcg_status kcg_seifert_from_json(const char* json, kcg_seifert** out);
/* Built-in corpus: unknot, trefoil, right-trefoil, left-trefoil,
 * figure-eight, paper-k. */
KCG_API kcg_status kcg_seifert_from_name(const char* name, kcg_seifert** out);
/* Connected sum of `count` left-handed trefoils, count = ceil(C/4) + 1, for
 * a nonnegative rational C written as "10", "3/2" or "2.5". */
KCG_API kcg_status kcg_seifert_suggest(const char* bound_c, kcg_seifert** out);
KCG_API kcg_status kcg_seifert_connected_sum(const kcg_seifert* a, const kcg_seifert* b,
                                             kcg_seifert** out);
KCG_API kcg_status kcg_seifert_mirror(const kcg_seifert* s, kcg_seifert** out);
KCG_API void kcg_seifert_free(kcg_seifert* s);
KCG_API size_t kcg_seifert_genus(const kcg_seifert* s);
KCG_API kcg_status kcg_seifert_to_json(const kcg_seifert* s, char** json_out);

/* Exact Tristram-Levine signature at exp(2 pi i k/p). */
KCG_API kcg_status kcg_signature(const kcg_seifert* s, long k, long p, long* value);

/* Alexander polynomial, determinant, genus, bounded metabolizer search. */
KCG_API kcg_status kcg_analyze(const kcg_seifert* s, long bound, char** json_out);
/* {"angle","signature","singular"}; a singular angle returns
 * KCG_DEGENERATE_FORM with the JSON still filled in. */
KCG_API kcg_status kcg_signature_report(const kcg_seifert* s, const char* angle,
                                        char** json_out);
/* Invariant factors, linking form, and (optionally) all metabolizers with
 * their vanishing characters. */
KCG_API kcg_status kcg_cover_report(const kcg_seifert* s, int with_metabolizers,
                                    char** json_out);
/* Checks the genus-two infection argument with companion J. `sample_c` holds
 * `n_sample_c` rational bounds C at which the witness inequality is
 * evaluated exactly (may be NULL when n_sample_c is 0). */
KCG_API kcg_status kcg_verify_paper(const kcg_seifert* companion, const char* const* sample_c,
                                    size_t n_sample_c, int suggested, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* KNOTCG_KNOTCG_H */
