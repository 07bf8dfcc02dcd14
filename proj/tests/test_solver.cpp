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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/game_io.hpp"
#include "core/oracle_explicit.hpp"
#include "core/oracle_prior.hpp"
#include "core/solver.hpp"
#include "support/oracles.hpp"

using namespace oblige;
using namespace oblige::testing;

TEST_CASE("both variants of the five-node game are graciously won everywhere")
{
    for (const char* name : {"ex1", "ex1-dashed"}) {
        ObligingGame g = fixture(name);
        SolveResult res = solveObliging(g);
        CHECK(res.winningRegion == std::vector<char>(5, 1));
        // Every winning real node carries a valid certificate.
        CHECK(res.certificates.size() > 0);
        for (const auto& [key, cert] : res.certificates)
            CHECK(isValidCertificate(cert, g));
    }
}

TEST_CASE("prior reduction solves the five-node game identically")
{
    ObligingGame g = fixture("ex1");
    CHECK(oraclePriorReduction(g) == std::vector<char>(5, 1));
    CHECK(oraclePriorReduction(fixture("ex1-dashed")) == std::vector<char>(5, 1));
}

TEST_CASE("the weak-promise automaton size on a single Buchi color")
{
    std::string text =
        "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {a}\n"
        "strong: true\nweak: Inf(a)\n";
    ObligingGame g = parseGame(text);
    CHECK(priorWeakAutomatonStates(g) == 2);  // waiting + ({a}, 0)
}

TEST_CASE("a weak objective behind a strong-violating trap")
{
    // The challenger owns the only edge that produces the weak color, and
    // taking the detour costs the strong objective: the region must agree
    // with the prior reduction either way.
    std::string text =
        "oblige 1\nnodes: 2\nnames: p q\nowners: EA\ncolors: s w\n"
        "edge p q {}\nedge q p {w}\nedge q q {s}\n"
        "strong: Fin(s)\nweak: Inf(w)\n";
    ObligingGame g = parseGame(text);
    SolveResult res = solveObliging(g);
    CHECK(res.winningRegion == oraclePriorReduction(g));
}

TEST_CASE("explicit certificate game on a self-loop")
{
    std::string text =
        "oblige 1\nnodes: 1\nnames: v\nowners: E\ncolors: a\nedge v v {a}\n"
        "strong: Inf(a)\nweak: Inf(a)\n";
    ObligingGame g = parseGame(text);
    CHECK(oracleExplicitCertificateGame(g) == std::vector<char>{1});

    // An unsatisfiable weak objective leaves no valid certificates.
    std::string dead =
        "oblige 1\nnodes: 1\nnames: v\nowners: E\ncolors: a\nedge v v {a}\n"
        "strong: Inf(a)\nweak: Fin(a) & Inf(a)\n";
    ObligingGame g2 = parseGame(dead);
    CHECK(oracleExplicitCertificateGame(g2) == std::vector<char>{0});
    CHECK(solveObliging(g2).winningRegion == std::vector<char>{0});
}

TEST_CASE("explicit oracle on the extraction fixture with challenger owners")
{
    ObligingGame base = fixture("ex10");
    std::string text = serializeGame(base);
    // Hand the middle and right node to the challenger.
    auto pos = text.find("owners: EEE");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 11, "owners: EAA");
    ObligingGame g = parseGame(text);

    SolveResult cert = solveObliging(g);
    std::vector<char> expl = oracleExplicitCertificateGame(g);
    std::vector<char> prior = oraclePriorReduction(g);
    CHECK(cert.winningRegion == expl);
    CHECK(cert.winningRegion == prior);
}

TEST_CASE("region sanity: winners admit obliging plays")
{
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 30; round++) {
        ObligingGame g = randomSolvableGame(rng, {4, 3, true});
        SolveResult res = solveObliging(g);
        for (int v = 0; v < g.nodeCount(); v++)
            if (res.winningRegion[v]) CHECK(findValidWitness(g, v).has_value());
    }
}

TEST_CASE("tri-oracle agreement on a quick batch")
{
    std::mt19937_64 rng(271828);
    int games = 0, explicitRuns = 0;
    while (games < 40) {
        ObligingGame g = randomSolvableGame(rng, {5, 3, true});
        games++;
        SolveResult cert = solveObliging(g);
        std::vector<char> prior = oraclePriorReduction(g);
        REQUIRE_MESSAGE(cert.winningRegion == prior, serializeGame(g));
        if (g.nodeCount() <= 3) {
            try {
                ExplicitOracleOptions opts;
                opts.certificateBudget = 30000;
                std::vector<char> expl = oracleExplicitCertificateGame(g, opts);
                REQUIRE_MESSAGE(cert.winningRegion == expl, serializeGame(g));
                explicitRuns++;
            } catch (const GuardError&) {
            }
        }
    }
    CHECK(explicitRuns >= 5);
}

TEST_CASE("solver guards the factorial memory blowup")
{
    std::string text =
        "oblige 1\nnodes: 1\nowners: E\ncolors: a b c d e\nedge 0 0 {a,b,c,d,e}\n"
        "strong: Inf(a) & Inf(b) & Inf(c) & Inf(d) & Inf(e)\nweak: true\n";
    ObligingGame g = parseGame(text);
    CHECK_THROWS_AS(solveObliging(g), GuardError);
    SolveOptions opts;
    opts.maxStrongColors = 5;
    CHECK(solveObliging(g, opts).winningRegion == std::vector<char>{1});
}

TEST_CASE("solve report is valid JSON with the expected fields")
{
    ObligingGame g = fixture("ex1");
    SolveResult res = solveObliging(g);
    std::string json = solveReportJson(g, res, "cert");
    CHECK(json.find("\"oblige_report\": 1") != std::string::npos);
    CHECK(json.find("\"v1\": \"exists\"") != std::string::npos);
    CHECK(json.find("\"attractor_calls\"") != std::string::npos);
}
