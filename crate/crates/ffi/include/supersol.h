#ifndef SUPERSOL_H
#define SUPERSOL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SupersolStatus {
  SUPERSOL_STATUS_OK = 0,
  SUPERSOL_STATUS_NULL_POINTER = 1,
  SUPERSOL_STATUS_INVALID_UTF8 = 2,
  SUPERSOL_STATUS_PARSE = 3,
  SUPERSOL_STATUS_CAP_EXCEEDED = 4,
  SUPERSOL_STATUS_INVALID_ARGUMENT = 5,
  SUPERSOL_STATUS_NOT_A_MEMBER = 6,
  SUPERSOL_STATUS_VERIFICATION = 7,
  SUPERSOL_STATUS_PANIC = 8,
} SupersolStatus;

/**
 * Opaque group handle.
 */
typedef struct SupersolGroup SupersolGroup;

/**
 * Opaque subgroup handle, tied to the group it was created from.
 */
typedef struct SupersolSubgroup SupersolSubgroup;

typedef struct SupersolReport {
  uint64_t order;
  bool abelian;
  bool cyclic;
  bool nilpotent;
  bool soluble;
  bool supersoluble;
  bool metanilpotent;
  bool sylow_tower_supersoluble;
  bool abelian_sylows;
} SupersolReport;

typedef struct SupersolPairVerdict {
  bool a_subnormal;
  bool b_subnormal;
  bool a_supersoluble;
  bool b_supersoluble;
  bool generates;
  bool hypotheses_hold;
  bool condition1;
  bool condition2;
  bool corollary_condition;
  /**
   * Only meaningful when `hypotheses_hold`.
   */
  bool supersoluble;
  bool violation;
} SupersolPairVerdict;

typedef struct SupersolExampleSummary {
  bool passed;
  uint64_t e_order;
  /**
   * 0 when no candidate was found.
   */
  uint64_t h_order;
  /**
   * 0 when no candidate was found.
   */
  uint64_t x_order;
  uint32_t failing_clauses;
} SupersolExampleSummary;

/**
 * Builds a group from group-spec text (`name`, `degree`, `gen` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SupersolStatus supersol_group_from_spec(const char *text, struct SupersolGroup **out);

/**
 * Builds a catalog group. `param` 0 means "no parameter".
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum SupersolStatus supersol_group_from_family(const char *name,
                                               uint64_t param,
                                               struct SupersolGroup **out);

/**
 * # Safety
 * `group` must come from this library and not be freed twice. Null is ignored.
 */
void supersol_group_free(struct SupersolGroup *group);

/**
 * Returns 0 for a null handle.
 *
 * # Safety
 * `group` must be null or a live handle.
 */
uint64_t supersol_group_order(const struct SupersolGroup *group);

/**
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum SupersolStatus supersol_group_classify(const struct SupersolGroup *group,
                                            struct SupersolReport *out);

/**
 * Subgroup generated by `;`-separated cycle-notation permutations.
 *
 * # Safety
 * `group` must be a live handle, `gens` NUL-terminated, `out` writable.
 */
enum SupersolStatus supersol_subgroup_from_generators(const struct SupersolGroup *group,
                                                      const char *gens,
                                                      struct SupersolSubgroup **out);

/**
 * # Safety
 * `sub` must come from this library and not be freed twice. Null is ignored.
 */
void supersol_subgroup_free(struct SupersolSubgroup *sub);

/**
 * Returns 0 for a null handle.
 *
 * # Safety
 * `sub` must be null or a live handle.
 */
uint64_t supersol_subgroup_order(const struct SupersolSubgroup *sub);

/**
 * Writes the subnormal defect, or -1 when `sub` is not subnormal.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum SupersolStatus supersol_subnormal_defect(const struct SupersolGroup *group,
                                              const struct SupersolSubgroup *sub,
                                              int64_t *out);

/**
 * # Safety
 * All handles must be live and `a`, `b` must belong to `group`; `out` must be writable.
 */
enum SupersolStatus supersol_check_pair(const struct SupersolGroup *group,
                                        const struct SupersolSubgroup *a,
                                        const struct SupersolSubgroup *b,
                                        struct SupersolPairVerdict *out);

/**
 * Rebuilds the order-144 example and checks every clause.
 *
 * # Safety
 * `out` must be writable.
 */
enum SupersolStatus supersol_order_144_example(struct SupersolExampleSummary *out);

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *supersol_last_error(void);

#endif  /* SUPERSOL_H */
