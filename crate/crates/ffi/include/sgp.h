/* C interface for the sgp numerical semigroup toolkit. */

#ifndef SGP_H
#define SGP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a fallible call. Zero is success; everything else names the
 * first problem encountered.
 */
typedef enum SgpStatus {
  SgpStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  SgpStatus_NullArgument = 1,
  /**
   * The generator list was empty.
   */
  SgpStatus_EmptyGenerators = 2,
  /**
   * An element that must be positive was zero or negative.
   */
  SgpStatus_NotPositive = 3,
  /**
   * The generators have a common divisor greater than one.
   */
  SgpStatus_GcdNotOne = 4,
  /**
   * The proposed gap set is not the complement of anything additively
   * closed.
   */
  SgpStatus_NotClosed = 5,
  /**
   * The modulus passed to `sgp_apery_set` is a gap.
   */
  SgpStatus_NotMember = 6,
  /**
   * The semigroup has a single minimal generator, so no second one.
   */
  SgpStatus_NoSecondGenerator = 7,
  /**
   * An input is large enough to overflow internal arithmetic.
   */
  SgpStatus_Overflow = 8,
  /**
   * Structurally invalid parameters for the requested family.
   */
  SgpStatus_BadParameters = 9,
  /**
   * The requested Frobenius number is a multiple of the multiplicity.
   */
  SgpStatus_Divides = 10,
  /**
   * The genus bound exceeds the configured cap.
   */
  SgpStatus_CapExceeded = 11,
  /**
   * No registered claim has the given identifier.
   */
  SgpStatus_UnknownTheorem = 12,
  /**
   * No filter has the given name.
   */
  SgpStatus_UnknownPredicate = 13,
  /**
   * A serialized record declares a schema this build does not read.
   */
  SgpStatus_UnsupportedSchema = 14,
  /**
   * The out buffer cannot hold the result; `written` carries the
   * required length.
   */
  SgpStatus_BufferTooSmall = 15,
} SgpStatus;

/**
 * Family tag reported by the classification calls.
 */
typedef enum SgpFamily {
  SgpFamily_HalfLine = 0,
  SgpFamily_Symmetric = 1,
  SgpFamily_DeltaMinus = 2,
  SgpFamily_DeltaFm = 3,
  SgpFamily_No = 4,
} SgpFamily;

/**
 * Opaque semigroup handle; create with the `sgp_new_*` constructors and
 * release with `sgp_free`.
 */
typedef struct SgpSemigroup SgpSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the numerical semigroup generated by `gens[0..len]`.
 *
 * # Safety
 * `gens` must point to `len` readable `int64_t` values (it may be null only
 * when `len` is zero) and `out` must be a valid pointer.
 */
enum SgpStatus sgp_new_from_generators(const int64_t *gens,
                                       uintptr_t len,
                                       struct SgpSemigroup **out);

/**
 * Builds the numerical semigroup whose gap set is exactly
 * `gaps[0..len]`. Fails with `NotClosed` when no such semigroup exists.
 *
 * # Safety
 * `gaps` must point to `len` readable `int64_t` values (it may be null only
 * when `len` is zero) and `out` must be a valid pointer.
 */
enum SgpStatus sgp_new_from_gaps(const int64_t *gaps, uintptr_t len, struct SgpSemigroup **out);

/**
 * Builds the half-line with the given multiplicity: zero together with
 * every integer from `multiplicity` on.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SgpStatus sgp_new_half_line(int64_t multiplicity, struct SgpSemigroup **out);

/**
 * Builds the half-line of the given multiplicity with
 * `2 * multiplicity - semigroup_type` removed. Requires
 * `1 <= semigroup_type <= multiplicity - 1`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SgpStatus sgp_new_delta_minus(int64_t multiplicity,
                                   int64_t semigroup_type,
                                   struct SgpSemigroup **out);

/**
 * Builds the semigroup of all multiples of `multiplicity` joined with
 * every integer past `frobenius`. Requires `2 <= multiplicity < frobenius`
 * and that `multiplicity` does not divide `frobenius`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SgpStatus sgp_new_delta_fm(int64_t frobenius, int64_t multiplicity, struct SgpSemigroup **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `s` must have come from an `sgp_new_*` constructor and must not be used
 * after this call.
 */
void sgp_free(struct SgpSemigroup *s);

/**
 * Frobenius number: the largest integer outside the semigroup, `-1` for
 * the naturals. Returns `INT64_MIN` on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
int64_t sgp_frobenius(const struct SgpSemigroup *s);

/**
 * Multiplicity: the least positive element. Returns `INT64_MIN` on a null
 * handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
int64_t sgp_multiplicity(const struct SgpSemigroup *s);

/**
 * Genus: the number of gaps. Returns `INT64_MIN` on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
int64_t sgp_genus(const struct SgpSemigroup *s);

/**
 * Type: the number of pseudo-Frobenius elements. Returns `INT64_MIN` on a
 * null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
int64_t sgp_type(const struct SgpSemigroup *s);

/**
 * Reduced type: the number of pseudo-Frobenius elements within one
 * multiplicity of the Frobenius number. Returns `INT64_MIN` on a null
 * handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
int64_t sgp_reduced_type(const struct SgpSemigroup *s);

/**
 * Embedding dimension: the number of minimal generators. Returns
 * `INT64_MIN` on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
int64_t sgp_embedding_dimension(const struct SgpSemigroup *s);

/**
 * Membership test. Returns false on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
bool sgp_contains(const struct SgpSemigroup *s, int64_t x);

/**
 * Second minimal generator, written to `out`. Fails with
 * `NoSecondGenerator` when the semigroup is generated by one element.
 *
 * # Safety
 * `s` must be a live handle or null; `out` must be a valid pointer.
 */
enum SgpStatus sgp_second_generator(const struct SgpSemigroup *s, int64_t *out);

/**
 * True when the type is one. Returns false on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
bool sgp_is_symmetric(const struct SgpSemigroup *s);

/**
 * True when twice the genus equals the Frobenius number plus the type.
 * Returns false on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
bool sgp_is_almost_symmetric(const struct SgpSemigroup *s);

/**
 * True when the embedding dimension equals the multiplicity. Returns false
 * on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
bool sgp_is_med(const struct SgpSemigroup *s);

/**
 * True when the reduced type equals the type. Returns false on a null
 * handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
bool sgp_has_max_reduced_type(const struct SgpSemigroup *s);

/**
 * True when the Frobenius number is below the multiplicity. Returns false
 * on a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
bool sgp_is_half_line(const struct SgpSemigroup *s);

/**
 * True when the semigroup is all of the naturals. Returns false on a null
 * handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
bool sgp_is_naturals(const struct SgpSemigroup *s);

/**
 * Writes the gap set, ascending.
 *
 * # Safety
 * `s` must be a live handle or null; `buf` must hold `cap` writable
 * `int64_t` values (null allowed when `cap` is zero); `written` must be a
 * valid pointer.
 */
enum SgpStatus sgp_gaps(const struct SgpSemigroup *s,
                        int64_t *buf,
                        uintptr_t cap,
                        uintptr_t *written);

/**
 * Writes the minimal generating set, ascending.
 *
 * # Safety
 * Same contract as `sgp_gaps`.
 */
enum SgpStatus sgp_minimal_generators(const struct SgpSemigroup *s,
                                      int64_t *buf,
                                      uintptr_t cap,
                                      uintptr_t *written);

/**
 * Writes the pseudo-Frobenius elements, ascending.
 *
 * # Safety
 * Same contract as `sgp_gaps`.
 */
enum SgpStatus sgp_pseudo_frobenius(const struct SgpSemigroup *s,
                                    int64_t *buf,
                                    uintptr_t cap,
                                    uintptr_t *written);

/**
 * Writes the reduced pseudo-Frobenius elements, ascending.
 *
 * # Safety
 * Same contract as `sgp_gaps`.
 */
enum SgpStatus sgp_reduced_pf(const struct SgpSemigroup *s,
                              int64_t *buf,
                              uintptr_t cap,
                              uintptr_t *written);

/**
 * Writes the Apéry set with respect to `n`, ascending. Fails with
 * `NotMember` when `n` is not a positive element of the semigroup.
 *
 * # Safety
 * Same contract as `sgp_gaps`.
 */
enum SgpStatus sgp_apery_set(const struct SgpSemigroup *s,
                             int64_t n,
                             int64_t *buf,
                             uintptr_t cap,
                             uintptr_t *written);

/**
 * Decides whether the semigroup is almost symmetric with maximal reduced
 * type and names the family that makes it so. `DeltaMinus` reports the
 * multiplicity in `param_a` and the type in `param_b`; the other verdicts
 * leave both at zero.
 *
 * # Safety
 * `s` must be a live handle or null; `family`, `param_a`, and `param_b`
 * must be valid pointers.
 */
enum SgpStatus sgp_classify_almost_symmetric(const struct SgpSemigroup *s,
                                             enum SgpFamily *family,
                                             int64_t *param_a,
                                             int64_t *param_b);

/**
 * Decides whether the semigroup has maximal embedding dimension together
 * with maximal reduced type and names the family that makes it so.
 * `DeltaFm` reports the Frobenius number in `param_a` and the multiplicity
 * in `param_b`; the other verdicts leave both at zero.
 *
 * # Safety
 * Same contract as `sgp_classify_almost_symmetric`.
 */
enum SgpStatus sgp_classify_med(const struct SgpSemigroup *s,
                                enum SgpFamily *family,
                                int64_t *param_a,
                                int64_t *param_b);

/**
 * Counts semigroups of each genus from zero through `max_genus` that
 * satisfy the named filter (`"none"`, `"symmetric"`, `"almost_symmetric"`,
 * `"med"`, or `"max_reduced_type"`). `counts` receives `max_genus + 1`
 * entries under the usual `written`/`cap` protocol.
 *
 * # Safety
 * `filter` must be a valid NUL-terminated string; `counts` must hold `cap`
 * writable `uint64_t` values (null allowed when `cap` is zero); `written`
 * must be a valid pointer.
 */
enum SgpStatus sgp_count_by_genus(uint32_t max_genus,
                                  const char *filter,
                                  uint64_t *counts,
                                  uintptr_t cap,
                                  uintptr_t *written);

/**
 * Runs one registered claim against every semigroup of genus at most
 * `max_genus`. Writes how many semigroups the claim constrains to
 * `universe` and how many violated it to `violations`; zero violations
 * means the claim held.
 *
 * # Safety
 * `theorem_id` must be a valid NUL-terminated string; `universe` and
 * `violations` must be valid pointers.
 */
enum SgpStatus sgp_verify(const char *theorem_id,
                          uint32_t max_genus,
                          uint64_t *universe,
                          uint64_t *violations);

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *sgp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SGP_H */
