#ifndef METABEL_H
#define METABEL_H

#include <stdbool.h>
#include <stdint.h>

/*
 Status codes shared with the command-line exit codes for 0 to 3.
 */
typedef enum mb_status {
  MB_OK = 0,
  MB_CHECK_FAILED = 1,
  MB_PARSE_ERROR = 2,
  MB_PRECONDITION = 3,
  MB_NULL_ARGUMENT = 4,
  MB_INTERNAL = 5,
} mb_status;

/*
 Verification suite selector for [`mb_verify`].
 */
typedef enum mb_suite {
  MB_SUITE_IDENTITIES = 0,
  MB_SUITE_BASIS = 1,
  MB_SUITE_TABLE = 2,
  MB_SUITE_ALL = 3,
} mb_suite;

/*
 Consequence space of one identity set in one multilinear degree.
 */
typedef struct mb_oracle mb_oracle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Normal form of `term` in `variety` (`"mnov"` or `"mlieadm"`), written to
 `*out` as a polynomial string.

 # Safety
 `variety` and `term` must be NUL-terminated strings; `out` must be a
 valid pointer.
 */
enum mb_status mb_normal_form(const char *variety, const char *term, char **out);

/*
 Number of multilinear basis monomials of `degree` in `variety`.

 # Safety
 `variety` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum mb_status mb_basis_dim(const char *variety, uint32_t degree, uint64_t *out);

/*
 Build the consequence space of a built-in variety (`novikov`, `mnov`,
 `lieadm`, `mlieadm`, `mlieadm-polarized`, `lieadm-polarized`).

 # Safety
 `variety` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum mb_status mb_oracle_new(const char *variety, uint32_t degree, struct mb_oracle **out);

/*
 Build the consequence space of identities given in the identity-file
 format (one identity per line over `a..h`, `#` comments).

 # Safety
 `text` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum mb_status mb_oracle_from_identities(const char *text, uint32_t degree, struct mb_oracle **out);

/*
 Dimension of the multilinear quotient.

 # Safety
 `oracle` must come from `mb_oracle_new` or `mb_oracle_from_identities`;
 `out` must be a valid pointer.
 */
enum mb_status mb_oracle_dim(const struct mb_oracle *oracle, uint64_t *out);

/*
 Canonical reduction of a multilinear polynomial of the oracle's degree.
 `*is_consequence` is set when the reduction is zero.

 # Safety
 `oracle` must be a live handle, `poly` a NUL-terminated string, and `out`
 and `is_consequence` valid pointers.
 */
enum mb_status mb_oracle_reduce(const struct mb_oracle *oracle,
                                const char *poly,
                                char **out,
                                bool *is_consequence);

/*
 Run a verification suite; the JSON report goes to `*report`. Returns
 `MB_CHECK_FAILED` when any check fails.

 # Safety
 `variety` must be a NUL-terminated string; `report` must be a valid
 pointer.
 */
enum mb_status mb_verify(const char *variety, uint32_t degree, enum mb_suite suite, char **report);

/*
 # Safety
 `oracle` must be null or a handle not yet freed.
 */
void mb_oracle_free(struct mb_oracle *oracle);

/*
 # Safety
 `s` must be null or a string returned by this library and not yet freed.
 */
void mb_string_free(char *s);

/*
 Message for the last failure on this thread; empty after success. The
 pointer stays valid until the next call into the library on this thread.
 */
const char *mb_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* METABEL_H */
