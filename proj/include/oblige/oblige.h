/*
 * Copyright 2025 the oblige authors
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

/* C interface of the oblige solver library. All objects are opaque handles
 * owned by the library; functions report obl_status and, where a char**
 * error slot is given, an error message to release with obl_string_free. */

#ifndef OBLIGE_OBLIGE_H
#define OBLIGE_OBLIGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct obl_game obl_game;
typedef struct obl_result obl_result;
typedef struct obl_strategy obl_strategy;

typedef enum obl_status {
    OBL_OK = 0,
    OBL_ERR_PARSE = 1,
    OBL_ERR_GUARD = 2,
    OBL_ERR_INVALID = 3,
    OBL_ERR_INTERNAL = 4
} obl_status;

typedef enum obl_engine {
    OBL_ENGINE_CERT = 0,     /* certificate-game fixpoint solver */
    OBL_ENGINE_PRIOR = 1,    /* Buchi-automaton product reduction */
    OBL_ENGINE_EXPLICIT = 2  /* materialized certificate game (tiny inputs) */
} obl_engine;

typedef struct obl_solve_options {
    int max_strong_colors;   /* factorial memory guard, default 4 */
    int max_weak_colors;     /* prior engine guess guard, default 8 */
    long certificate_budget; /* explicit engine enumeration guard */
} obl_solve_options;

void obl_solve_options_init(obl_solve_options* opts);

const char* obl_version(void);
void obl_string_free(char* s);

/* Games */
obl_status obl_game_parse(const char* text, obl_game** out, char** err);
obl_status obl_game_fixture(const char* name, obl_game** out, char** err);
obl_status obl_game_random(uint64_t seed, int nodes, int colors, double density,
                           const char* strong_class, const char* weak_class, obl_game** out,
                           char** err);
char* obl_game_serialize(const obl_game* game);
int obl_game_node_count(const obl_game* game);
const char* obl_game_node_name(const obl_game* game, int node);
void obl_game_free(obl_game* game);

/* Solving */
obl_status obl_solve(const obl_game* game, obl_engine engine, const obl_solve_options* opts,
                     obl_result** out, char** err);
int obl_result_wins(const obl_result* result, int node);
char* obl_result_report_json(const obl_result* result, const obl_game* game);
long obl_result_attractor_calls(const obl_result* result);
double obl_result_seconds(const obl_result* result);

/* Strategies (certificate engine results only) */
obl_status obl_strategy_extract(const obl_game* game, const obl_result* result,
                                obl_strategy** out, char** err);
obl_status obl_strategy_verify(const obl_game* game, const obl_strategy* strategy, int* strong_ok,
                               int* gracious_ok, char** detail, char** err);
long obl_strategy_memory_count(const obl_strategy* strategy);
char* obl_strategy_serialize(const obl_strategy* strategy, const obl_game* game);
obl_status obl_strategy_parse(const char* text, const obl_game* game, obl_strategy** out,
                              char** err);
void obl_strategy_free(obl_strategy* strategy);

void obl_result_free(obl_result* result);

#ifdef __cplusplus
}
#endif

#endif /* OBLIGE_OBLIGE_H */
