/*
 * Copyright 2026 The sumnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the sumnet library.
 *
 * Handles are opaque; every function that can fail returns a status code and
 * leaves a thread-local description readable through sumnet_last_error().
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with sumnet_string_free().
 */

#ifndef SUMNET_SUMNET_H
#define SUMNET_SUMNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sumnet_field sumnet_field;     /* a finite field GF(p^k) */
typedef struct sumnet_network sumnet_network; /* an immutable directed acyclic network */
typedef struct sumnet_verdict sumnet_verdict; /* the outcome of a feasibility search */

typedef enum sumnet_status {
  SUMNET_OK = 0,
  SUMNET_ERR_INVALID_ARGUMENT = 1,
  SUMNET_ERR_PARSE = 2,
  SUMNET_ERR_BUDGET_EXCEEDED = 3,
  SUMNET_ERR_IO = 4,
  SUMNET_ERR_INTERNAL = 5
} sumnet_status;

typedef enum sumnet_search_mode {
  SUMNET_MODE_FULL = 0,
  SUMNET_MODE_NORMALIZED = 1
} sumnet_search_mode;

const char* sumnet_version(void);

/* Description of the most recent failure on this thread; never NULL. */
const char* sumnet_last_error(void);

void sumnet_string_free(char* s);

/* ---- fields -------------------------------------------------------- */

sumnet_status sumnet_field_make(uint64_t p, uint32_t k, sumnet_field** out);
/* Designations are "p^k"; a bare "p" means k = 1. */
sumnet_status sumnet_field_parse(const char* designation, sumnet_field** out);
void sumnet_field_free(sumnet_field* field);

uint64_t sumnet_field_characteristic(const sumnet_field* field);
uint32_t sumnet_field_degree(const sumnet_field* field);
uint64_t sumnet_field_order(const sumnet_field* field);
sumnet_status sumnet_field_designation(const sumnet_field* field, char** out);

/* ---- networks ------------------------------------------------------ */

/* Builds the network a construction expression denotes: S(m), K(m,n), or
 * X(expr,expr) nested arbitrarily; whitespace-insensitive. */
sumnet_status sumnet_network_from_expr(const char* expr, sumnet_network** out);
sumnet_status sumnet_network_from_json(const char* json_text, sumnet_network** out);
sumnet_status sumnet_network_from_file(const char* path, sumnet_network** out);
void sumnet_network_free(sumnet_network* net);

size_t sumnet_network_node_count(const sumnet_network* net);
size_t sumnet_network_edge_count(const sumnet_network* net);
size_t sumnet_network_source_count(const sumnet_network* net);
size_t sumnet_network_terminal_count(const sumnet_network* net);
/* Borrowed pointer, valid for the lifetime of the network handle. */
const char* sumnet_network_name(const sumnet_network* net);
/* 1 if every terminal is reachable from every source, else 0. */
int sumnet_network_all_pairs_connected(const sumnet_network* net);

sumnet_status sumnet_network_to_json(const sumnet_network* net, char** out);
sumnet_status sumnet_network_to_dot(const sumnet_network* net, char** out);

/* ---- characteristic sets ------------------------------------------- */

/* Formats the analytic characteristic set of an expression:
 * "all", "∅", or "{p1,p2,...}". */
sumnet_status sumnet_charset_format(const char* expr, char** out);
/* Writes up to `capacity` member primes ascending and the total count.
 * `*all_primes` is 1 when the set is every prime (count is then 0). */
sumnet_status sumnet_charset_primes(const char* expr, int* all_primes, uint64_t* primes,
                                    size_t capacity, size_t* count);

/* ---- feasibility --------------------------------------------------- */

/* Exhaustive scalar-coding search. `budget` bounds the number of coefficient
 * assignments (0 means the default of 10^8); `jobs` is the worker count
 * (0 or 1 means single-threaded; the verdict does not depend on it); `seed`
 * drives the witness verification trials. Returns
 * SUMNET_ERR_BUDGET_EXCEEDED, with the required space size in the error
 * message, when the assignment space is larger than the budget. */
sumnet_status sumnet_feasibility_check(const sumnet_network* net, const sumnet_field* field,
                                       sumnet_search_mode mode, uint64_t budget, uint32_t jobs,
                                       uint64_t seed, sumnet_verdict** out);
void sumnet_verdict_free(sumnet_verdict* verdict);

int sumnet_verdict_feasible(const sumnet_verdict* verdict);
/* Exact assignment-space size as a decimal string. */
sumnet_status sumnet_verdict_space_size(const sumnet_verdict* verdict, char** out);
uint64_t sumnet_verdict_assignments_examined(const sumnet_verdict* verdict);
/* Full verdict document (mode, field, space, witness when feasible). */
sumnet_status sumnet_verdict_to_json(const sumnet_verdict* verdict, char** out);
/* Witness code document; fails with SUMNET_ERR_INVALID_ARGUMENT when the
 * verdict is infeasible. */
sumnet_status sumnet_verdict_witness_json(const sumnet_verdict* verdict, char** out);

/* Runs the oracle for each comma-separated field designation and compares
 * the verdicts with the expression's analytic characteristic set. Writes a
 * plain-text report and sets *all_agree to 1 when oracle and analysis match
 * on every field. */
sumnet_status sumnet_cross_validate(const char* expr, const char* fields_csv,
                                    sumnet_search_mode mode, uint64_t budget, uint32_t jobs,
                                    uint64_t seed, char** report_out, int* all_agree);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUMNET_SUMNET_H */
