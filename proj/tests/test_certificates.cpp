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

#include "core/certificate.hpp"
#include "core/game_io.hpp"
#include "support/oracles.hpp"

using namespace oblige;
using namespace oblige::testing;

TEST_CASE("certificate length bound")
{
    CHECK(certLenParams(3, 4, 4) == 48);
    CHECK(certLenParams(1, 0, 0) == 2);
    CHECK(certLenParams(5, 4, 2) == 62);
    CHECK(certLen(fixture("ex1")) == 62);
    // Derived color sets of the extraction fixture: the strong formula
    // mentions a, b, c and the weak one only d.
    ObligingGame ex10 = fixture("ex10");
    CHECK(ex10.d() == 3);
    CHECK(ex10.k() == 1);
    CHECK(certLen(ex10) == 29);
}

TEST_CASE("validity of the two periodic witnesses of the five-node game")
{
    ObligingGame g = fixture("ex1");
    auto n = [&](const char* s) { return *g.nodeByName(s); };

    // (v1 v2 v4 v5)^omega: meets the Streett pairs, misses color c.
    Certificate rejected{{n("v1")}, {n("v2"), n("v4"), n("v5"), n("v1")}};
    CHECK_FALSE(isValidCertificate(rejected, g));

    // (v1 v2 v3 v4 v1 v2 v4 v5)^omega: visits all colors infinitely often.
    Certificate accepted{
        {n("v1")},
        {n("v2"), n("v3"), n("v4"), n("v1"), n("v2"), n("v4"), n("v5"), n("v1")}};
    CHECK(isValidCertificate(accepted, g));

    // Structural problems are distinct from acceptance failures.
    Certificate broken{{n("v1")}, {n("v5"), n("v2")}};
    CHECK_THROWS_AS(isValidCertificate(broken, g), StructuralError);
    Certificate emptyStem{{}, {n("v1")}};
    CHECK_THROWS_AS(isValidCertificate(emptyStem, g), StructuralError);
}

TEST_CASE("the worked extraction example")
{
    ObligingGame g = fixture("ex10");
    int x = *g.nodeByName("x"), y = *g.nodeByName("y"), z = *g.nodeByName("z");

    // The literature's own certificate is accepted as-is.
    Certificate golden{{x, y, y, z, z}, {y, z, z, y, z}};
    CHECK(isValidCertificate(golden, g));

    // Extraction from the full witness x y y z (y z z)^omega reproduces the
    // golden stem; the loop may be the shorter equivalent walk.
    Lasso paperWitness{{x, y, y, z}, {y, z, z}};
    Certificate cert = extractCertificate(paperWitness, g);
    CHECK(cert.stem == std::vector<int>{x, y, y, z, z});
    CHECK(isValidCertificate(cert, g));
    CHECK(lassoInfinitySet(Lasso{cert.stem, cert.loop}, g) ==
          lassoInfinitySet(paperWitness, g));
    CHECK((long)cert.stem.size() <= 12);
    CHECK((long)cert.loop.size() <= 36);
    CHECK(fingerprintCorrespondence(cert, paperWitness, g));

    // The wait-free witness x (y z z)^omega is accepted too.
    Lasso waitFree{{x}, {y, z, z}};
    Certificate cert2 = extractCertificate(waitFree, g);
    CHECK(isValidCertificate(cert2, g));
    CHECK(fingerprintCorrespondence(cert2, waitFree, g));

    // Deterministic: same input, same output.
    Certificate again = extractCertificate(paperWitness, g);
    CHECK(again.stem == cert.stem);
    CHECK(again.loop == cert.loop);

    CHECK(cert.toString(g) == "x y y z z ~ " + g.pathToString(cert.loop));
}

TEST_CASE("extraction rejects witnesses that fail an objective")
{
    ObligingGame g = fixture("ex1");
    auto n = [&](const char* s) { return *g.nodeByName(s); };
    Lasso badWeak{{}, {n("v1"), n("v2"), n("v4"), n("v5")}};
    CHECK_THROWS_WITH_AS(extractCertificate(badWeak, g), doctest::Contains("weak"), Error);
}

TEST_CASE("extraction from an already minimal witness")
{
    std::string text =
        "oblige 1\nnodes: 1\nnames: v\nowners: E\ncolors: a\nedge v v {a}\n"
        "strong: Inf(a)\nweak: Inf(a)\n";
    ObligingGame g = parseGame(text);
    Certificate cert = extractCertificate(Lasso{{}, {0}}, g);
    CHECK(cert.loop == std::vector<int>{0});
    CHECK((int)cert.stem.size() <= 2);
    CHECK(isValidCertificate(cert, g));

    // With no colors at all the stem stays a single node.
    std::string plain =
        "oblige 1\nnodes: 1\nnames: v\nowners: E\ncolors:\nedge v v {}\n"
        "strong: true\nweak: true\n";
    ObligingGame g2 = parseGame(plain);
    Certificate cert2 = extractCertificate(Lasso{{}, {0}}, g2);
    CHECK(cert2.stem == std::vector<int>{0});
    CHECK(cert2.loop == std::vector<int>{0});
}

TEST_CASE("random extraction passes validity, bounds and correspondence")
{
    std::mt19937_64 rng(20250810);
    int extracted = 0;
    for (int round = 0; round < 80; round++) {
        ObligingGame g = randomSolvableGame(rng, {});
        for (int v = 0; v < g.nodeCount(); v++) {
            auto witness = findValidWitness(g, v);
            if (!witness) continue;
            Certificate cert = extractCertificate(*witness, g);
            extracted++;
            CHECK(cert.stem.front() == (witness->stem.empty() ? witness->loop.front()
                                                              : witness->stem.front()));
            CHECK(isValidCertificate(cert, g));
            CHECK((long)cert.stem.size() <= (long)g.nodeCount() * (g.d() + 1));
            CHECK((long)cert.loop.size() <= (long)(g.d() + g.k() + 1) * (g.nodeCount() + 1));
            CHECK(fingerprintCorrespondence(cert, *witness, g));
            CHECK(lassoInfinitySet(Lasso{cert.stem, cert.loop}, g) ==
                  lassoInfinitySet(*witness, g));
            break;  // one node per game keeps the suite fast
        }
    }
    CHECK(extracted > 30);
}
