#ifndef SL2_EPOLY_H
#define SL2_EPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes. Zero is success.
 */
typedef enum sl2_status {
  SL2_STATUS_OK = 0,
  SL2_STATUS_NULL_POINTER = 1,
  SL2_STATUS_INVALID_ARGUMENT = 2,
  SL2_STATUS_GENUS_OUT_OF_RANGE = 3,
  SL2_STATUS_UNKNOWN_HOLONOMY = 4,
  SL2_STATUS_BAD_PRIME = 5,
  SL2_STATUS_ARITHMETIC = 6,
  SL2_STATUS_PANIC = 7,
} sl2_status;

/*
 An integer polynomial in `q`.
 */
typedef struct sl2_poly sl2_poly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL if it succeeded.
 Free with [`sl2_string_free`].
 */
char *sl2_last_error(void);

/*
 Library version as a static string; do not free.
 */
const char *sl2_version(void);

/*
 E-polynomial of the character variety with holonomy tag `holonomy`
 (`id`, `minus-id`, `jplus`, `jminus`, `xi`) at genus `genus >= 1`.

 # Safety
 `holonomy` must be a valid NUL-terminated string and `out` writable.
 */
enum sl2_status sl2_moduli_epoly(const char *holonomy, uint32_t genus, struct sl2_poly **out);

/*
 Component `index` (0..8: e0, e1, e2, e3, a, b, c, d) of the genus-`genus`
 sector vector.

 # Safety
 `out` must be writable.
 */
enum sl2_status sl2_sector_component(uint32_t genus, uint32_t index, struct sl2_poly **out);

/*
 Parses the `{"var":"q","coeffs":[[deg,"coeff"],...]}` JSON form.

 # Safety
 `json` must be a valid NUL-terminated string and `out` writable.
 */
enum sl2_status sl2_poly_from_json(const char *json, struct sl2_poly **out);

/*
 Degree of `p`, or -1 for the zero polynomial.

 # Safety
 `p` must be a live handle and `out` writable.
 */
enum sl2_status sl2_poly_degree(const struct sl2_poly *p, int64_t *out);

/*
 Human-readable form, e.g. `q^6 - 2q^4 - 30q^3 - 2q^2 + 1`.

 # Safety
 `p` must be a live handle and `out` writable.
 */
enum sl2_status sl2_poly_to_string(const struct sl2_poly *p, char **out);

/*
 JSON form, the inverse of [`sl2_poly_from_json`].

 # Safety
 `p` must be a live handle and `out` writable.
 */
enum sl2_status sl2_poly_to_json(const struct sl2_poly *p, char **out);

/*
 Coefficient of `q^exp` as a decimal string.

 # Safety
 `p` must be a live handle and `out` writable.
 */
enum sl2_status sl2_poly_coeff(const struct sl2_poly *p, size_t exp, char **out);

/*
 `p(x)` as a decimal string; exact for any `x`.

 # Safety
 `p` must be a live handle and `out` writable.
 */
enum sl2_status sl2_poly_eval(const struct sl2_poly *p, int64_t x, char **out);

/*
 Whether `q^d p(1/q) = p`. Fails if `d` is below the degree.

 # Safety
 `p` must be a live handle and `out` writable.
 */
enum sl2_status sl2_poly_is_palindromic(const struct sl2_poly *p, size_t d, bool *out);

/*
 Releases a handle. NULL is ignored.

 # Safety
 `p` must come from this library and not be used afterwards.
 */
void sl2_poly_free(struct sl2_poly *p);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not be used afterwards.
 */
void sl2_string_free(char *s);

/*
 Runs the identity suite for genus 1..=`max_genus`. `report_json` may be
 NULL; otherwise it receives the JSON report.

 # Safety
 `passed` must be writable; `report_json` NULL or writable.
 */
enum sl2_status sl2_check_identities(uint32_t max_genus, bool *passed, char **report_json);

/*
 Compares point counts over `F_prime` with the polynomials for genus
 1..=`max_genus`. `report_json` may be NULL.

 # Safety
 `passed` must be writable; `report_json` NULL or writable.
 */
enum sl2_status sl2_verify_counts(uint64_t prime,
                                  uint32_t max_genus,
                                  bool *passed,
                                  char **report_json);

/*
 Glues genus `left` and `right` sector data; JSON with the four sectors
 and the pushed `(T, N)` monodromy.

 # Safety
 `out` must be writable.
 */
enum sl2_status sl2_glue_json(uint32_t left, uint32_t right, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SL2_EPOLY_H */
