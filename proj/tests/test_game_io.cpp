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

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "core/game_io.hpp"

using namespace oblige;

namespace {

std::string normalizeWhitespace(const std::string& s)
{
    std::string out;
    bool space = false;
    for (char c : s) {
        if (c == ' ' || c == '\t') {
            space = true;
            continue;
        }
        if (space && !out.empty() && out.back() != '\n') out += ' ';
        space = false;
        out += c;
    }
    return out;
}

}  // namespace

TEST_CASE("the five-node fixture")
{
    ObligingGame g = fixture("ex1");
    CHECK(g.nodeCount() == 5);
    CHECK(g.arena().edges().size() == 7);
    CHECK(g.arena().owner(*g.nodeByName("v1")) == Owner::Exists);
    CHECK(g.arena().owner(*g.nodeByName("v4")) == Owner::Exists);
    CHECK(g.arena().owner(*g.nodeByName("v2")) == Owner::Forall);
    CHECK(g.strong() == streettFormula({{0, 1}, {2, 3}}));
    CHECK(g.weak() == genBuchiFormula({0, 2}));
    CHECK(g.d() == 4);
    CHECK(g.k() == 2);

    ObligingGame dashed = fixture("ex1-dashed");
    CHECK(dashed.arena().edges().size() == 8);
    CHECK(dashed.arena().edgeBetween(*dashed.nodeByName("v5"), *dashed.nodeByName("v4")));
    CHECK_THROWS_AS(fixture("nope"), Error);
}

TEST_CASE("the three-node extraction fixture")
{
    ObligingGame g = fixture("ex10");
    CHECK(g.nodeCount() == 3);
    CHECK(g.arena().edges().size() == 5);
    int x = *g.nodeByName("x"), y = *g.nodeByName("y"), z = *g.nodeByName("z");
    CHECK(g.arena().edge(*g.arena().edgeBetween(z, y)).colors ==
          ColorSet::fromList({0, 3}));  // a and d
    CHECK(g.arena().edge(*g.arena().edgeBetween(z, z)).colors == ColorSet::fromList({0, 2}));
    CHECK(g.weak() == Formula::inf(3));
    (void)x;
}

TEST_CASE("shipped fixture files parse to the built-in fixtures")
{
    for (const char* name : {"ex1", "ex1-dashed", "ex10"}) {
        std::ifstream file(std::string(OBLIGE_FIXTURE_DIR) + "/" + name + ".oblige");
        REQUIRE(file.good());
        std::stringstream buf;
        buf << file.rdbuf();
        ObligingGame fromFile = parseGame(buf.str());
        CHECK(serializeGame(fromFile) == serializeGame(fixture(name)));
    }
}

TEST_CASE("parse and serialize round-trip")
{
    ObligingGame g = fixture("ex10");
    std::string text = serializeGame(g);
    ObligingGame back = parseGame(text);
    CHECK(back.nodeCount() == g.nodeCount());
    CHECK(back.strong() == g.strong());
    CHECK(back.weak() == g.weak());
    CHECK(serializeGame(back) == text);
    CHECK(normalizeWhitespace(serializeGame(back)) == normalizeWhitespace(text));
}

TEST_CASE("parse diagnostics")
{
    CHECK_THROWS_AS(parseGame("nodes: 2\n"), ParseError);  // missing header

    // A node without a successor is rejected.
    std::string noSucc =
        "oblige 1\nnodes: 2\nowners: EE\ncolors: a\nedge 0 0 {a}\nstrong: true\nweak: true\n";
    CHECK_THROWS_WITH_AS(parseGame(noSucc), doctest::Contains("no successor"), ParseError);

    std::string badNode =
        "oblige 1\nnodes: 2\nowners: EE\ncolors: a\nedge 0 pluto {}\nstrong: true\nweak: true\n";
    CHECK_THROWS_WITH_AS(parseGame(badNode), doctest::Contains("unknown node"), ParseError);

    std::string badColor =
        "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {zz}\nstrong: true\nweak: true\n";
    CHECK_THROWS_WITH_AS(parseGame(badColor), doctest::Contains("undeclared color"), ParseError);

    std::string badFormula =
        "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {}\nstrong: Inf(a\nweak: true\n";
    CHECK_THROWS_AS(parseGame(badFormula), ParseError);
}

TEST_CASE("parallel edges merge by color union")
{
    std::string text =
        "oblige 1\nnodes: 2\nowners: EA\ncolors: a b\n"
        "edge 0 1 {a}\nedge 0 1 {b}\nedge 1 0 {}\n"
        "strong: Inf(a)\nweak: Inf(b)\n";
    ObligingGame g = parseGame(text);
    CHECK(g.arena().edges().size() == 2);
    CHECK(g.arena().edge(*g.arena().edgeBetween(0, 1)).colors == ColorSet::fromList({0, 1}));
}

TEST_CASE("random generation is deterministic and well-formed")
{
    ObligingGame g1 = randomGame(1, 4, 2, 0.5, ObjectiveClass::Streett, ObjectiveClass::GenBuchi);
    ObligingGame g2 = randomGame(1, 4, 2, 0.5, ObjectiveClass::Streett, ObjectiveClass::GenBuchi);
    CHECK(serializeGame(g1) == serializeGame(g2));

    ObligingGame dense = randomGame(3, 3, 2, 1.0, ObjectiveClass::Rabin, ObjectiveClass::Buchi);
    CHECK(dense.arena().edges().size() == 9);  // complete digraph with self-loops

    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; i++) {
        uint64_t seed = rng();
        ObligingGame g = randomGame(seed, 1 + (int)(rng() % 5), 1 + (int)(rng() % 3),
                                    0.2 + 0.1 * (double)(rng() % 8), ObjectiveClass::EL,
                                    ObjectiveClass::EL);
        // Round-trips through the text format.
        ObligingGame back = parseGame(serializeGame(g));
        CHECK(serializeGame(back) == serializeGame(g));
        for (int v = 0; v < g.nodeCount(); v++) CHECK(!g.arena().out(v).empty());
    }
}

TEST_CASE("lasso infinity sets and fingerprints on the fixtures")
{
    ObligingGame ex1 = fixture("ex1");
    auto node = [&](const char* n) { return *ex1.nodeByName(n); };
    Lasso loop1{{}, {node("v1"), node("v2"), node("v4"), node("v5")}};
    CHECK(lassoInfinitySet(loop1, ex1) == ColorSet::fromList({0, 1}));  // a and b

    std::string selfLoop =
        "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {}\nstrong: true\nweak: true\n";
    ObligingGame tiny = parseGame(selfLoop);
    CHECK(lassoInfinitySet(Lasso{{}, {0}}, tiny).empty());

    ObligingGame ex10 = fixture("ex10");
    int x = *ex10.nodeByName("x"), y = *ex10.nodeByName("y"), z = *ex10.nodeByName("z");
    CHECK(lassoInfinitySet(Lasso{{x}, {y, z, z}}, ex10) == ColorSet::fromList({0, 2, 3}));

    // Broken lassos name the offending pair.
    Lasso broken{{x}, {y, x}};
    CHECK_THROWS_WITH_AS(lassoInfinitySet(broken, ex10), doctest::Contains("(y,x)"),
                         StructuralError);

    std::vector<int> p1 = {x};
    CHECK(pathFingerprint(p1, ex10.strongColors(), ex10).empty());
    std::vector<int> p2 = {x, y, y, z};
    CHECK(pathFingerprint(p2, ex10.strongColors(), ex10) == ColorSet::fromList({0, 1}));
    std::vector<int> p3 = {x, y, y, z, z};
    CHECK(pathFingerprint(p3, ex10.strongColors(), ex10) == ColorSet::fromList({0, 1, 2}));
}

TEST_CASE("lasso infinity set agrees with a brute-force unrolling")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; round++) {
        ObligingGame g = randomGame(rng(), 1 + (int)(rng() % 4), 1 + (int)(rng() % 3), 0.6,
                                    ObjectiveClass::EL, ObjectiveClass::EL);
        // Random lasso: random walk, then close at the first repeat.
        std::vector<int> walk = {(int)(rng() % (uint64_t)g.nodeCount())};
        std::vector<int> seenAt(g.nodeCount(), -1);
        seenAt[walk[0]] = 0;
        int loopStart = -1;
        while (loopStart < 0) {
            auto outs = g.arena().out(walk.back());
            int e = outs[rng() % outs.size()];
            int next = g.arena().edge(e).dst;
            if (seenAt[next] >= 0) {
                loopStart = seenAt[next];
            } else {
                seenAt[next] = (int)walk.size();
                walk.push_back(next);
            }
        }
        Lasso lasso{{walk.begin(), walk.begin() + loopStart},
                    {walk.begin() + loopStart, walk.end()}};

        // Unroll two loop passes; the colors of the second pass are exactly
        // the recurring ones.
        std::vector<int> unrolled = lasso.stem;
        unrolled.insert(unrolled.end(), lasso.loop.begin(), lasso.loop.end());
        unrolled.insert(unrolled.end(), lasso.loop.begin(), lasso.loop.end());
        unrolled.push_back(lasso.loop.front());
        ColorSet secondPass;
        for (size_t i = lasso.stem.size() + lasso.loop.size(); i + 1 < unrolled.size(); i++) {
            int e = *g.arena().edgeBetween(unrolled[i], unrolled[i + 1]);
            secondPass = secondPass.unionWith(g.arena().edge(e).colors);
        }
        CHECK(lassoInfinitySet(lasso, g) == secondPass);
    }
}
