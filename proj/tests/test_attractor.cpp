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

#include "core/dag_attractor.hpp"
#include "core/game_io.hpp"
#include "core/oracle_explicit.hpp"
#include "support/oracles.hpp"

using namespace oblige;
using namespace oblige::testing;

namespace {

AttractorArgument randomArgument(std::mt19937_64& rng, const SolverContext& ctx, double density)
{
    AttractorArgument arg = AttractorArgument::allOf(ctx.space(), ctx.priorityCount(), false);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& level : arg.byPriority)
        for (size_t i = 0; i < level.size(); i++) level[i] = unit(rng) < density;
    return arg;
}

}  // namespace

TEST_CASE("an unchallenged valid self-loop is attracted with empty targets")
{
    std::string text =
        "oblige 1\nnodes: 1\nnames: v\nowners: E\ncolors: a\nedge v v {a}\n"
        "strong: Inf(a)\nweak: Inf(a)\n";
    ObligingGame g = parseGame(text);
    SolverContext ctx(g);
    AttractorArgument empty = AttractorArgument::allOf(ctx.space(), ctx.priorityCount(), false);
    PerPermutationResult res =
        dagAttractorForPermutation(ctx, ctx.table().initialRank(), empty, true);
    CHECK(res.nodes == std::vector<char>{1});
    Certificate cert = extractCertificate(*res.witness[0], g);
    CHECK(isValidCertificate(cert, g));
}

TEST_CASE("the five-node game with fully safe targets attracts everywhere")
{
    ObligingGame g = fixture("ex1");
    SolverContext ctx(g);
    AttractorArgument full = AttractorArgument::allOf(ctx.space(), ctx.priorityCount(), true);
    PerPermutationResult res =
        dagAttractorForPermutation(ctx, ctx.table().initialRank(), full, true);
    CHECK(res.nodes == std::vector<char>(5, 1));
    for (int v = 0; v < 5; v++) {
        Certificate cert = extractCertificate(*res.witness[v], g);
        CHECK(cert.stem.front() == v);
        CHECK(isValidCertificate(cert, g));
    }
}

TEST_CASE("full-target attraction on the extraction fixture covers its anchor")
{
    ObligingGame g = fixture("ex10");
    SolverContext ctx(g);
    AttractorArgument full = AttractorArgument::allOf(ctx.space(), ctx.priorityCount(), true);
    DagAttractorResult res = dagAttractor(ctx, full, false);
    CHECK(res.attracted[ctx.space().id(*g.nodeByName("x"), ctx.table().initialRank())]);
}

TEST_CASE("a colorless game uses the single trivial permutation")
{
    std::string text =
        "oblige 1\nnodes: 2\nowners: EA\ncolors:\n"
        "edge 0 1 {}\nedge 1 0 {}\nstrong: true\nweak: true\n";
    ObligingGame g = parseGame(text);
    SolverContext ctx(g);
    CHECK(ctx.space().permCount == 1);
    AttractorArgument full = AttractorArgument::allOf(ctx.space(), ctx.priorityCount(), true);
    DagAttractorResult res = dagAttractor(ctx, full, false);
    CHECK(res.attracted == RealNodeSet(2, 1));
}

TEST_CASE("agreement with the enumerated-certificate reference")
{
    std::mt19937_64 rng(909);
    int compared = 0;
    for (int round = 0; round < 60; round++) {
        ObligingGame g = randomSolvableGame(rng, {3, 3, true});
        if (g.d() > 3) continue;
        SolverContext ctx(g);

        std::vector<std::vector<Certificate>> certs;
        try {
            ExplicitOracleOptions opts;
            opts.certificateBudget = 20000;
            certs = enumerateCertificates(g, opts);
        } catch (const GuardError&) {
            continue;
        }

        for (int trial = 0; trial < 3; trial++) {
            AttractorArgument arg = randomArgument(rng, ctx, 0.25 * (double)(1 + trial));
            for (int rank = 0; rank < ctx.table().count(); rank++) {
                PerPermutationResult fast = dagAttractorForPermutation(ctx, rank, arg, false);
                std::vector<char> slow = referenceDagAttractor(
                    g, ctx.table().permutation(rank), arg.byPriority, ctx.space(), certs);
                REQUIRE(fast.nodes == slow);
                compared++;
            }
        }
    }
    CHECK(compared >= 100);
}

TEST_CASE("monotone in the target sets")
{
    std::mt19937_64 rng(1313);
    int checked = 0;
    for (int round = 0; round < 40; round++) {
        ObligingGame g = randomSolvableGame(rng, {4, 3, true});
        SolverContext ctx(g);
        AttractorArgument small = randomArgument(rng, ctx, 0.3);
        AttractorArgument big = small;
        for (auto& level : big.byPriority)
            for (size_t i = 0; i < level.size(); i++)
                if (rng() % 3 == 0) level[i] = 1;
        REQUIRE(small.subsetOf(big));

        DagAttractorResult rs = dagAttractor(ctx, small, false);
        DagAttractorResult rb = dagAttractor(ctx, big, false);
        for (size_t i = 0; i < rs.attracted.size(); i++)
            if (rs.attracted[i]) CHECK(rb.attracted[i]);
        checked++;
    }
    CHECK(checked == 40);
}

TEST_CASE("recorded witnesses respect exit safety")
{
    std::mt19937_64 rng(1717);
    for (int round = 0; round < 25; round++) {
        ObligingGame g = randomSolvableGame(rng, {4, 2, true});
        SolverContext ctx(g);
        AttractorArgument full = AttractorArgument::allOf(ctx.space(), ctx.priorityCount(), true);
        DagAttractorResult res = dagAttractor(ctx, full, true);
        for (int id = 0; id < ctx.space().size(); id++) {
            if (!res.attracted[id]) continue;
            REQUIRE(res.certificates[id].has_value());
            CHECK(isValidCertificate(*res.certificates[id], g));
        }
    }
}
