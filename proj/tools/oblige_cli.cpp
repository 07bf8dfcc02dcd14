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

// Command-line front end. Talks to the solver exclusively through the
// public C API.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oblige/oblige.h"

namespace {

constexpr int kExitError = 2;
constexpr int kExitGuard = 3;

struct StatusPrinter {
    int operator()(obl_status st, char* err) const
    {
        if (st == OBL_OK) return 0;
        std::cerr << "error: " << (err ? err : "unknown") << "\n";
        obl_string_free(err);
        return st == OBL_ERR_GUARD ? kExitGuard : kExitError;
    }
};

// Fixture names double as file names for convenience.
int loadGame(const std::string& input, obl_game** game)
{
    StatusPrinter print;
    std::ifstream file(input);
    if (file.good()) {
        std::stringstream buf;
        buf << file.rdbuf();
        char* err = nullptr;
        obl_status st = obl_game_parse(buf.str().c_str(), game, &err);
        return print(st, err);
    }
    if (input == "ex1" || input == "ex1-dashed" || input == "ex10") {
        char* err = nullptr;
        obl_status st = obl_game_fixture(input.c_str(), game, &err);
        return print(st, err);
    }
    std::cerr << "error: cannot open '" << input << "'\n";
    return kExitError;
}

obl_engine engineFromName(const std::string& name)
{
    if (name == "cert") return OBL_ENGINE_CERT;
    if (name == "prior") return OBL_ENGINE_PRIOR;
    if (name == "explicit") return OBL_ENGINE_EXPLICIT;
    throw CLI::ValidationError("--engine", "unknown engine '" + name + "'");
}

int cmdSolve(const std::string& input, const std::string& engineName, bool json,
             const std::string& strategyPath, const obl_solve_options& opts)
{
    StatusPrinter print;
    obl_game* game = nullptr;
    if (int rc = loadGame(input, &game)) return rc;

    obl_result* result = nullptr;
    char* err = nullptr;
    obl_status solveStatus = obl_solve(game, engineFromName(engineName), &opts, &result, &err);
    if (int rc = print(solveStatus, err)) {
        obl_game_free(game);
        return rc;
    }

    if (json) {
        char* report = obl_result_report_json(result, game);
        std::cout << report << "\n";
        obl_string_free(report);
    } else {
        for (int v = 0; v < obl_game_node_count(game); v++)
            std::cout << obl_game_node_name(game, v) << ": "
                      << (obl_result_wins(result, v) ? "exists" : "forall") << "\n";
    }

    int rc = 0;
    if (!strategyPath.empty()) {
        obl_strategy* strategy = nullptr;
        obl_status st = obl_strategy_extract(game, result, &strategy, &err);
        rc = print(st, err);
        if (rc == 0) {
            int strongOk = 0, graciousOk = 0;
            char* detail = nullptr;
            obl_status vst =
                obl_strategy_verify(game, strategy, &strongOk, &graciousOk, &detail, &err);
            rc = print(vst, err);
            if (rc == 0 && (!strongOk || !graciousOk)) {
                std::cerr << "error: extracted strategy failed verification"
                          << (detail ? std::string(": ") + detail : "") << "\n";
                rc = 1;
            }
            obl_string_free(detail);
            if (rc == 0) {
                char* text = obl_strategy_serialize(strategy, game);
                std::ofstream out(strategyPath);
                out << text;
                obl_string_free(text);
                if (!out.good()) {
                    std::cerr << "error: cannot write '" << strategyPath << "'\n";
                    rc = kExitError;
                }
            }
            obl_strategy_free(strategy);
        }
    }

    obl_result_free(result);
    obl_game_free(game);
    return rc;
}

int cmdVerify(const std::string& gameInput, const std::string& strategyPath)
{
    StatusPrinter print;
    obl_game* game = nullptr;
    if (int rc = loadGame(gameInput, &game)) return rc;

    std::ifstream file(strategyPath);
    if (!file.good()) {
        std::cerr << "error: cannot open '" << strategyPath << "'\n";
        obl_game_free(game);
        return kExitError;
    }
    std::stringstream buf;
    buf << file.rdbuf();

    obl_strategy* strategy = nullptr;
    char* err = nullptr;
    obl_status parseStatus = obl_strategy_parse(buf.str().c_str(), game, &strategy, &err);
    if (int rc = print(parseStatus, err)) {
        obl_game_free(game);
        return rc;
    }

    int strongOk = 0, graciousOk = 0;
    char* detail = nullptr;
    obl_status vst = obl_strategy_verify(game, strategy, &strongOk, &graciousOk, &detail, &err);
    int rc = print(vst, err);
    if (rc == 0) {
        std::cout << "strong: " << (strongOk ? "ok" : "violated") << "\n";
        std::cout << "gracious: " << (graciousOk ? "ok" : "violated") << "\n";
        if (detail) std::cout << detail << "\n";
        rc = (strongOk && graciousOk) ? 0 : 1;
    }
    obl_string_free(detail);
    obl_strategy_free(strategy);
    obl_game_free(game);
    return rc;
}

int cmdGen(uint64_t seed, int nodes, int colors, double density, const std::string& strongClass,
           const std::string& weakClass, const std::string& outPath)
{
    StatusPrinter print;
    obl_game* game = nullptr;
    char* err = nullptr;
    obl_status st = obl_game_random(seed, nodes, colors, density, strongClass.c_str(),
                                    weakClass.c_str(), &game, &err);
    if (int rc = print(st, err)) return rc;
    char* text = obl_game_serialize(game);
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        out << text;
    }
    obl_string_free(text);
    obl_game_free(game);
    return 0;
}

int cmdBench(const std::vector<int>& sizes, int seeds, const std::vector<std::string>& engines,
             const obl_solve_options& opts)
{
    std::printf("%-8s %-8s %-10s %-12s %-12s\n", "nodes", "engine", "solved", "total-ms",
                "attractors");
    for (int n : sizes) {
        for (const std::string& engineName : engines) {
            obl_engine engine = engineFromName(engineName);
            double totalMs = 0;
            long attractors = 0;
            int solved = 0;
            for (int s = 0; s < seeds; s++) {
                obl_game* game = nullptr;
                char* err = nullptr;
                if (obl_game_random(1000 + s, n, 3, 0.5, "streett", "genbuchi", &game, &err) !=
                    OBL_OK) {
                    obl_string_free(err);
                    continue;
                }
                auto t0 = std::chrono::steady_clock::now();
                obl_result* result = nullptr;
                obl_status st = obl_solve(game, engine, &opts, &result, &err);
                auto t1 = std::chrono::steady_clock::now();
                if (st == OBL_OK) {
                    solved++;
                    totalMs += std::chrono::duration<double, std::milli>(t1 - t0).count();
                    attractors += obl_result_attractor_calls(result);
                    obl_result_free(result);
                } else {
                    obl_string_free(err);
                }
                obl_game_free(game);
            }
            std::printf("%-8d %-8s %-10d %-12.2f %-12ld\n", n, engineName.c_str(), solved, totalMs,
                        attractors);
        }
    }
    return 0;
}

int cmdSelftest(int count, uint64_t seed, const obl_solve_options& opts)
{
    const char* strongClasses[] = {"streett", "rabin", "genbuchi", "el", "parity"};
    const char* weakClasses[] = {"genbuchi", "streett", "rabin", "el", "buchi"};
    int failures = 0, explicitRuns = 0;
    for (int i = 0; i < count; i++) {
        uint64_t s = seed + (uint64_t)i;
        int nodes = 2 + (int)(s % 4);  // 2..5
        int colors = 1 + (int)((s / 7) % 3);
        obl_game* game = nullptr;
        char* err = nullptr;
        if (obl_game_random(s, nodes, colors, 0.4 + 0.2 * (double)(s % 3),
                            strongClasses[s % 5], weakClasses[(s / 5) % 5], &game,
                            &err) != OBL_OK) {
            obl_string_free(err);
            continue;
        }
        obl_result* cert = nullptr;
        obl_result* prior = nullptr;
        bool ok = true;
        if (obl_solve(game, OBL_ENGINE_CERT, &opts, &cert, &err) != OBL_OK) {
            std::cerr << "selftest " << i << ": cert engine failed: " << err << "\n";
            obl_string_free(err);
            obl_game_free(game);
            failures++;
            continue;
        }
        if (obl_solve(game, OBL_ENGINE_PRIOR, &opts, &prior, &err) != OBL_OK) {
            std::cerr << "selftest " << i << ": prior engine failed: " << err << "\n";
            obl_string_free(err);
            obl_result_free(cert);
            obl_game_free(game);
            failures++;
            continue;
        }
        for (int v = 0; v < obl_game_node_count(game); v++)
            if (obl_result_wins(cert, v) != obl_result_wins(prior, v)) ok = false;

        if (nodes <= 3) {
            obl_result* expl = nullptr;
            if (obl_solve(game, OBL_ENGINE_EXPLICIT, &opts, &expl, &err) == OBL_OK) {
                explicitRuns++;
                for (int v = 0; v < obl_game_node_count(game); v++)
                    if (obl_result_wins(cert, v) != obl_result_wins(expl, v)) ok = false;
                obl_result_free(expl);
            } else {
                obl_string_free(err);
            }
        }

        if (!ok) {
            failures++;
            char* text = obl_game_serialize(game);
            std::cerr << "selftest " << i << ": engines disagree on\n" << text;
            obl_string_free(text);
        }
        obl_result_free(prior);
        obl_result_free(cert);
        obl_game_free(game);
    }
    std::cout << "selftest: " << count << " instances, " << explicitRuns
              << " with explicit oracle, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"oblige: solver for obliging games with Emerson-Lei objectives"};
    app.require_subcommand(1);

    obl_solve_options opts;
    obl_solve_options_init(&opts);

    // solve
    std::string input, engine = "cert", strategyPath;
    bool json = false;
    auto* solve = app.add_subcommand("solve", "solve a game and print the gracious winners");
    solve->add_option("game", input, "game file or fixture name")->required();
    solve->add_option("--engine", engine, "cert | prior | explicit");
    solve->add_flag("--json", json, "emit the JSON report");
    solve->add_option("--strategy", strategyPath, "extract, verify and write a strategy");
    solve->add_option("--max-perms", opts.max_strong_colors,
                      "max strong colors (factorial memory guard)");
    solve->add_option("--cert-budget", opts.certificate_budget,
                      "explicit engine certificate budget");

    // verify
    std::string verifyGame, verifyStrategy;
    auto* verify = app.add_subcommand("verify", "verify a strategy against a game");
    verify->add_option("game", verifyGame, "game file or fixture name")->required();
    verify->add_option("strategy", verifyStrategy, "strategy file")->required();

    // gen
    uint64_t seed = 1;
    int nodes = 4, colors = 2;
    double density = 0.5;
    std::string strongClass = "streett", weakClass = "genbuchi", outPath;
    auto* gen = app.add_subcommand("gen", "generate a seeded random game");
    gen->add_option("--seed", seed);
    gen->add_option("--nodes", nodes);
    gen->add_option("--colors", colors);
    gen->add_option("--density", density);
    gen->add_option("--strong", strongClass, "buchi|genbuchi|streett|rabin|parity|gr1|el");
    gen->add_option("--weak", weakClass);
    gen->add_option("-o,--output", outPath);

    // bench
    std::vector<int> sizes = {3, 4, 5};
    int benchSeeds = 5;
    std::vector<std::string> benchEngines = {"cert", "prior"};
    auto* bench = app.add_subcommand("bench", "time the engines on seeded games");
    bench->add_option("--sizes", sizes)->delimiter(',');
    bench->add_option("--seeds", benchSeeds);
    bench->add_option("--engines", benchEngines)->delimiter(',');

    // selftest
    int count = 50;
    uint64_t selftestSeed = 20250101;
    auto* selftest = app.add_subcommand("selftest", "cross-check the three engines");
    selftest->add_option("--count", count);
    selftest->add_option("--seed", selftestSeed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmdSolve(input, engine, json, strategyPath, opts);
        if (verify->parsed()) return cmdVerify(verifyGame, verifyStrategy);
        if (gen->parsed())
            return cmdGen(seed, nodes, colors, density, strongClass, weakClass, outPath);
        if (bench->parsed()) return cmdBench(sizes, benchSeeds, benchEngines, opts);
        if (selftest->parsed()) return cmdSelftest(count, selftestSeed, opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
