/* C interface to the Hurwitz S-unit presentation library.
 *
 * All functions returning hrw_status set a thread-local message readable
 * via hrw_last_error() on failure. Objects returned through out-pointers
 * are owned by the caller and released with the matching _free function.
 */
#ifndef HURWITZ_H
#define HURWITZ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hrw_presentation hrw_presentation;

typedef enum hrw_status {
  HRW_OK = 0,
  HRW_ERROR_USAGE = 1,          /* invalid argument, unknown format, bad file */
  HRW_ERROR_NO_ODD_PRIMES = 2,  /* S empty or containing 2 */
  HRW_ERROR_SIZE_LIMIT = 3,     /* oracle generator cap exceeded */
  HRW_ERROR_PRIME_IN_S = 4,     /* congruence prime inside S */
  HRW_ERROR_CAP_EXCEEDED = 5,   /* closure larger than the cap */
  HRW_ERROR_NOT_FOUND = 6,      /* unknown fixture name */
  HRW_ERROR_PARSE = 7,          /* malformed presentation file */
  HRW_ERROR_OVERFLOW = 8,       /* value outside 64-bit range */
  HRW_ERROR_INTERNAL = 9
} hrw_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* hrw_last_error(void);

void hrw_presentation_free(hrw_presentation* p);
void hrw_string_free(char* s);
void hrw_int64_array_free(int64_t* a);

/* ---- builders -------------------------------------------------------- */

/* Presentation of the projective S-unit group for the odd primes
 * primes[0..count). */
hrw_status hrw_present_main(const int64_t* primes, size_t count, hrw_presentation** out);

/* One generator per projective class of norm dividing the product of the
 * primes; generator_cap == 0 selects the default cap. */
hrw_status hrw_present_oracle(const int64_t* primes, size_t count, size_t generator_cap,
                              hrw_presentation** out);

/* Tietze simplification; non-positive budget fields select defaults. */
hrw_status hrw_simplify(const hrw_presentation* p, int max_passes, int max_relator_growth,
                        int max_eliminated_word_length, hrw_presentation** out);

/* Tabulated presentations (names: hrw_fixture_name). */
hrw_status hrw_fixture(const char* name, hrw_presentation** out);
size_t hrw_fixture_count(void);
const char* hrw_fixture_name(size_t index); /* NULL when out of range */

hrw_status hrw_parse_json(const char* text, hrw_presentation** out);

/* ---- presentation views ---------------------------------------------- */

size_t hrw_generator_count(const hrw_presentation* p);
size_t hrw_relator_count(const hrw_presentation* p);

/* Relation counts of the transversal builder (type 1..4); zeros for other
 * origins. */
hrw_status hrw_relation_type_counts(const hrw_presentation* p, int64_t out_counts[4]);

/* ---- operations ------------------------------------------------------ */

/* format: "json", "gap" or "magma". */
hrw_status hrw_export(const hrw_presentation* p, const char* format, char** out_text);

/* Evaluates every relator and checks witness norms; *out_pass is 1 when
 * everything verifies. out_report (optional) receives a printable report. */
hrw_status hrw_verify(const hrw_presentation* p, int* out_pass, char** out_report);

/* Invariant factors (> 1, each dividing the next) and free rank of the
 * abelianization. *out_torsion has *out_torsion_len entries. */
hrw_status hrw_abelianization(const hrw_presentation* p, int64_t** out_torsion,
                              size_t* out_torsion_len, size_t* out_free_rank);

/* Reduction mod q^power for an odd prime q outside S: checks relators map
 * to scalar matrices and measures the projectivized image closure mod q.
 * cap == 0 selects 10^6. */
hrw_status hrw_congruence_image(const hrw_presentation* p, int64_t q, int power, uint64_t cap,
                                int* out_all_scalar, uint64_t* out_image_order,
                                char** out_report);

/* All order elements of the given reduced norm, as doubled coordinates
 * (4 consecutive int64 per element, lexicographic order). */
hrw_status hrw_elements_of_norm(int64_t n, int64_t** out_coords, size_t* out_count);

#ifdef __cplusplus
}
#endif

#endif /* HURWITZ_H */
