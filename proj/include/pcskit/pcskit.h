/* Copyright 2026 The pcskit Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libpcskit. Every function that can fail returns a
 * pcs_status; on failure pcs_last_error() describes the problem for the
 * calling thread. Strings handed out through `char** out` parameters are
 * owned by the caller and released with pcs_string_free. Semigroup handles
 * are released with pcs_semigroup_destroy.
 */

#ifndef PCSKIT_PCSKIT_H
#define PCSKIT_PCSKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PCSKIT_BUILDING)
#    define PCS_API __declspec(dllexport)
#  else
#    define PCS_API __declspec(dllimport)
#  endif
#else
#  define PCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcs_status {
  PCS_OK = 0,
  PCS_INVALID_ARGUMENT,
  PCS_INDEX_OUT_OF_RANGE,
  PCS_NOT_ASSOCIATIVE,
  PCS_SYNTAX_ERROR,
  PCS_EMPTY_TERM,
  PCS_UNBOUND_VARIABLE,
  PCS_UNKNOWN_NAME,
  PCS_UNKNOWN_VARIETY,
  PCS_TOO_LARGE,
  PCS_NOT_A_GROUP,
  PCS_INVALID_MATRIX,
  PCS_NOT_COMPLETELY_SIMPLE,
  PCS_NOT_IN_PCS,
  PCS_FRESH_VARIABLE_EXHAUSTED,
  PCS_METHOD_DISAGREEMENT,
  PCS_COVER_NOT_FUNCTIONAL,
  PCS_INTERNAL
} pcs_status;

typedef struct pcs_semigroup pcs_semigroup;

/* Message for the last failing call on this thread; never NULL. */
PCS_API const char* pcs_last_error(void);
PCS_API const char* pcs_status_name(pcs_status status);
PCS_API void        pcs_string_free(char* s);

/* Semigroups. `table` holds order*order products, row-major, left factor
 * as the row. */
PCS_API pcs_status pcs_semigroup_create(size_t order, const uint32_t* table,
                                        pcs_semigroup** out);
PCS_API pcs_status pcs_semigroup_parse_sg(const char* text, pcs_semigroup** out);
PCS_API pcs_status pcs_semigroup_load(const char* path, pcs_semigroup** out);
PCS_API void       pcs_semigroup_destroy(pcs_semigroup* s);
PCS_API size_t     pcs_semigroup_order(const pcs_semigroup* s);
PCS_API pcs_status pcs_semigroup_multiply(const pcs_semigroup* s, uint32_t a,
                                          uint32_t b, uint32_t* out);
PCS_API pcs_status pcs_semigroup_write_sg(const pcs_semigroup* s, char** out);

/* Constructions. A cap of 0 selects the library default. */
PCS_API pcs_status pcs_power_semigroup(const pcs_semigroup* s, int with_empty,
                                       size_t cap, pcs_semigroup** out);
PCS_API pcs_status pcs_cyclic_group(size_t n, pcs_semigroup** out);
/* `matrix` lists the rows of the sandwich matrix separated by ';', entries
 * by ','; e.g. "0,0;0,1". Rows are indexed by Lambda, columns by I. */
PCS_API pcs_status pcs_rees_matrix(const pcs_semigroup* group,
                                   const char* matrix, pcs_semigroup** out);
PCS_API pcs_status pcs_consolidate(const pcs_semigroup* s, size_t cap,
                                   pcs_semigroup** out);

/* Queries returning a JSON document in *out. */

/* `variety` is a variety name or "pcs". For "pcs", `method` is a method
 * name or "all"; otherwise it selects an engine ("structural" when NULL). */
PCS_API pcs_status pcs_check(const pcs_semigroup* s, const char* variety,
                             const char* method, unsigned threads, char** out);
PCS_API pcs_status pcs_eval_identity(const pcs_semigroup* s,
                                     const char* identity, char** out);
PCS_API pcs_status pcs_green(const pcs_semigroup* s, char** out);
/* side is "left" (S^1 a) or "right" (a S^1). */
PCS_API pcs_status pcs_ideal(const pcs_semigroup* s, uint32_t element,
                             const char* side, char** out);
PCS_API pcs_status pcs_verify_power_theorem(const pcs_semigroup* s, size_t cap,
                                            char** out);
PCS_API pcs_status pcs_division_witness(const pcs_semigroup* s, size_t cap,
                                        char** out);
/* Re-runs a method witness as produced by pcs_check; *out receives
 * {"method": ..., "reproduced": bool}. */
PCS_API pcs_status pcs_replay_witness(const pcs_semigroup* s, const char* method,
                                      const char* witness, char** out);

typedef enum pcs_population_kind {
  PCS_POPULATION_EXHAUSTIVE = 0,
  PCS_POPULATION_TRANSFORMATION,
  PCS_POPULATION_REES,
  PCS_POPULATION_POWER_OF_CS
} pcs_population_kind;

typedef struct pcs_population {
  pcs_population_kind kind;
  size_t              order;  /* exhaustive; max base order for power_of_cs */
  size_t              degree; /* transformation */
  size_t              gens;   /* transformation */
  size_t              count;  /* transformation, rees */
  uint64_t            seed;
  int                 with_empty; /* power_of_cs */
} pcs_population;

/* Without cross validation only exhaustive populations are accepted and
 * the result is a count. */
PCS_API pcs_status pcs_census(const pcs_population* population, int dedup,
                              int cross_validate, unsigned threads, char** out);

/* Pseudoidentities. */
PCS_API pcs_status pcs_identity_format(const char* text, char** out);
PCS_API pcs_status pcs_identity_builtin(const char* name, char** out);
PCS_API pcs_status pcs_transform_star_rz(const char* identity, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PCSKIT_PCSKIT_H */
