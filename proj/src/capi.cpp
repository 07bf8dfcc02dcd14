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

#include "oblige/oblige.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>

#include "core/game_io.hpp"
#include "core/oracle_explicit.hpp"
#include "core/oracle_prior.hpp"
#include "core/solver.hpp"
#include "core/strategy.hpp"

using namespace oblige;

struct obl_game {
    ObligingGame game;
};

struct obl_result {
    std::vector<char> region;
    std::string engine;
    // Certificate-engine extras needed for strategy extraction.
    std::optional<SolveResult> full;
};

struct obl_strategy {
    MealyStrategy strategy;
    long memoryCount = 0;
};

namespace {

char* dupString(const std::string& s)
{
    char* out = (char*)std::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void setErr(char** err, const std::string& msg)
{
    if (err) *err = dupString(msg);
}

obl_status statusOf(const std::exception& e)
{
    if (dynamic_cast<const ParseError*>(&e)) return OBL_ERR_PARSE;
    if (dynamic_cast<const GuardError*>(&e)) return OBL_ERR_GUARD;
    if (dynamic_cast<const InternalError*>(&e)) return OBL_ERR_INTERNAL;
    return OBL_ERR_INVALID;
}

template <typename F>
obl_status guard(char** err, F&& body)
{
    try {
        body();
        return OBL_OK;
    } catch (const std::exception& e) {
        setErr(err, e.what());
        return statusOf(e);
    }
}

}  // namespace

extern "C" {

void obl_solve_options_init(obl_solve_options* opts)
{
    opts->max_strong_colors = 4;
    opts->max_weak_colors = 8;
    opts->certificate_budget = 100000;
}

const char* obl_version(void) { return "oblige 1.0.0"; }

void obl_string_free(char* s) { std::free(s); }

obl_status obl_game_parse(const char* text, obl_game** out, char** err)
{
    return guard(err, [&] { *out = new obl_game{parseGame(text)}; });
}

obl_status obl_game_fixture(const char* name, obl_game** out, char** err)
{
    return guard(err, [&] { *out = new obl_game{fixture(name)}; });
}

obl_status obl_game_random(uint64_t seed, int nodes, int colors, double density,
                           const char* strong_class, const char* weak_class, obl_game** out,
                           char** err)
{
    return guard(err, [&] {
        *out = new obl_game{randomGame(seed, nodes, colors, density,
                                       objectiveClassFromName(strong_class),
                                       objectiveClassFromName(weak_class))};
    });
}

char* obl_game_serialize(const obl_game* game) { return dupString(serializeGame(game->game)); }

int obl_game_node_count(const obl_game* game) { return game->game.nodeCount(); }

const char* obl_game_node_name(const obl_game* game, int node)
{
    if (node < 0 || node >= game->game.nodeCount()) return nullptr;
    return game->game.nodeName(node).c_str();
}

void obl_game_free(obl_game* game) { delete game; }

obl_status obl_solve(const obl_game* game, obl_engine engine, const obl_solve_options* opts,
                     obl_result** out, char** err)
{
    obl_solve_options defaults;
    obl_solve_options_init(&defaults);
    const obl_solve_options& o = opts ? *opts : defaults;
    return guard(err, [&] {
        auto res = std::make_unique<obl_result>();
        switch (engine) {
            case OBL_ENGINE_CERT: {
                SolveOptions so;
                so.maxStrongColors = o.max_strong_colors;
                res->full = solveObliging(game->game, so);
                res->region = res->full->winningRegion;
                res->engine = "cert";
                break;
            }
            case OBL_ENGINE_PRIOR: {
                PriorOracleOptions po;
                po.maxWeakColors = o.max_weak_colors;
                res->region = oraclePriorReduction(game->game, po);
                res->engine = "prior";
                break;
            }
            case OBL_ENGINE_EXPLICIT: {
                ExplicitOracleOptions eo;
                eo.certificateBudget = o.certificate_budget;
                res->region = oracleExplicitCertificateGame(game->game, eo);
                res->engine = "explicit";
                break;
            }
            default: throw Error("unknown engine");
        }
        *out = res.release();
    });
}

int obl_result_wins(const obl_result* result, int node)
{
    if (node < 0 || node >= (int)result->region.size()) return 0;
    return result->region[node] ? 1 : 0;
}

char* obl_result_report_json(const obl_result* result, const obl_game* game)
{
    if (result->full) return dupString(solveReportJson(game->game, *result->full, result->engine));
    SolveResult plain;
    plain.winningRegion = result->region;
    return dupString(solveReportJson(game->game, plain, result->engine));
}

long obl_result_attractor_calls(const obl_result* result)
{
    return result->full ? result->full->stats.attractorCalls : 0;
}

double obl_result_seconds(const obl_result* result)
{
    return result->full ? result->full->stats.seconds : 0.0;
}

obl_status obl_strategy_extract(const obl_game* game, const obl_result* result,
                                obl_strategy** out, char** err)
{
    return guard(err, [&] {
        if (!result->full) throw Error("strategy extraction needs a certificate-engine result");
        auto [strategy, info] = extractStrategy(game->game, *result->full);
        *out = new obl_strategy{std::move(strategy), info.reachableMemoryCount};
    });
}

obl_status obl_strategy_verify(const obl_game* game, const obl_strategy* strategy, int* strong_ok,
                               int* gracious_ok, char** detail, char** err)
{
    return guard(err, [&] {
        VerificationReport report = verifyStrategy(game->game, strategy->strategy);
        if (strong_ok) *strong_ok = report.strongOk ? 1 : 0;
        if (gracious_ok) *gracious_ok = report.graciousOk ? 1 : 0;
        if (detail) {
            std::string d;
            if (!report.strongOk && report.counterexample) {
                d = "strong objective violated on " +
                    game->game.pathToString(report.counterexample->stem) + " ~ " +
                    game->game.pathToString(report.counterexample->loop);
            } else if (!report.graciousOk) {
                d = "weak objective unreachable from " + report.stuckState;
            }
            *detail = d.empty() ? nullptr : dupString(d);
        }
    });
}

long obl_strategy_memory_count(const obl_strategy* strategy) { return strategy->memoryCount; }

char* obl_strategy_serialize(const obl_strategy* strategy, const obl_game* game)
{
    return dupString(serializeStrategy(strategy->strategy, game->game));
}

obl_status obl_strategy_parse(const char* text, const obl_game* game, obl_strategy** out,
                              char** err)
{
    return guard(err, [&] {
        MealyStrategy s = parseStrategy(text, game->game);
        long memories = s.memoryCount;
        *out = new obl_strategy{std::move(s), memories};
    });
}

void obl_strategy_free(obl_strategy* strategy) { delete strategy; }

void obl_result_free(obl_result* result) { delete result; }

}  // extern "C"
