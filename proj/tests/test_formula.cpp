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

#include "core/formula.hpp"
#include "core/game_io.hpp"

using namespace oblige;

namespace {
const ColorId a = 0, b = 1, c = 2, d = 3;

ColorSet cs(std::initializer_list<ColorId> colors)
{
    ColorSet s;
    for (ColorId x : colors) s.add(x);
    return s;
}
}  // namespace

TEST_CASE("atom evaluation on infinity sets")
{
    CHECK(Formula::inf(a).eval(cs({a})));
    CHECK_FALSE(Formula::inf(a).eval(cs({b})));
    CHECK(Formula::fin(a).eval(cs({b})));
    CHECK(Formula::t().eval(ColorSet()));
    CHECK_FALSE(Formula::f().eval(cs({a, b})));
}

TEST_CASE("the Streett and generalized-Buchi objectives of the five-node game")
{
    Formula strong = streettFormula({{a, b}, {c, d}});
    Formula weak = genBuchiFormula({a, c});
    // A play visiting a, b and d infinitely often meets the Streett pairs
    // but misses the generalized-Buchi requirement on c.
    CHECK(strong.eval(cs({a, b, d})));
    CHECK_FALSE(weak.eval(cs({a, b, d})));
    CHECK(weak.eval(cs({a, b, c, d})));
    CHECK(strong.eval(cs({a, b, c, d})));
}

TEST_CASE("negation dualizes and is an involution")
{
    CHECK(Formula::inf(a).negated() == Formula::fin(a));
    Formula clause = Formula::disj(Formula::fin(a), Formula::inf(b));
    CHECK(clause.negated() == Formula::conj(Formula::inf(a), Formula::fin(b)));

    Formula strong = streettFormula({{a, b}, {c, d}});
    CHECK(strong.negated().negated() == strong);

    // Pointwise complement over all subsets of four colors.
    for (uint32_t m = 0; m < 16; m++) {
        ColorSet I = ColorSet::fromMask(m);
        CHECK(strong.negated().eval(I) == !strong.eval(I));
    }
}

TEST_CASE("class constructors")
{
    CHECK(streettFormula({{a, b}, {c, d}}) ==
          Formula::conj(Formula::disj(Formula::fin(a), Formula::inf(b)),
                        Formula::disj(Formula::fin(c), Formula::inf(d))));
    CHECK(genBuchiFormula({a, c}) == Formula::conj(Formula::inf(a), Formula::inf(c)));
    CHECK_THROWS_AS(streettFormula({}), Error);
    CHECK_THROWS_AS(genBuchiFormula({}), Error);

    // Max-parity: some even priority recurs while everything above expires.
    Formula parity = parityFormula({a, b, c});
    for (uint32_t m = 0; m < 8; m++) {
        ColorSet I = ColorSet::fromMask(m);
        int top = -1;
        for (int p = 2; p >= 0; p--)
            if (I.has(p)) {
                top = p;
                break;
            }
        CHECK(parity.eval(I) == (top >= 0 && top % 2 == 0));
    }

    Formula gr1 = gr1Formula({a, b}, {c, d});
    CHECK(gr1.eval(cs({a})));             // request b avoided
    CHECK_FALSE(gr1.eval(cs({a, b, c})));  // all requests, grant d missing
    CHECK(gr1.eval(cs({a, b, c, d})));
}

TEST_CASE("monotone and antitone evaluation")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; round++) {
        // Random Inf-only and Fin-only formulas over six colors.
        std::vector<Formula> infs, fins;
        for (ColorId x = 0; x < 6; x++) {
            if (rng() % 2) infs.push_back(Formula::inf(x));
            if (rng() % 2) fins.push_back(Formula::fin(x));
        }
        if (infs.empty()) infs.push_back(Formula::inf(0));
        if (fins.empty()) fins.push_back(Formula::fin(0));
        Formula infOnly = rng() % 2 ? Formula::conjAll(infs) : Formula::disjAll(infs);
        Formula finOnly = rng() % 2 ? Formula::conjAll(fins) : Formula::disjAll(fins);

        for (uint32_t m = 0; m < 64; m++) {
            for (uint32_t m2 = 0; m2 < 64; m2++) {
                if ((m & m2) != m) continue;  // m subset of m2
                ColorSet small = ColorSet::fromMask(m), big = ColorSet::fromMask(m2);
                if (infOnly.eval(small)) CHECK(infOnly.eval(big));
                if (finOnly.eval(big)) CHECK(finOnly.eval(small));
            }
        }
    }
}

TEST_CASE("formula printing and reparsing")
{
    std::vector<std::string> names = {"a", "b", "c", "d"};
    Formula strong = streettFormula({{a, b}, {c, d}});
    CHECK(strong.toString(names) == "(Fin(a) | Inf(b)) & (Fin(c) | Inf(d))");
    CHECK(parseFormula(strong.toString(names), names) == strong);
    CHECK(parseFormula("true", names) == Formula::t());
    CHECK_THROWS_AS(parseFormula("Inf(z)", names), ParseError);
    CHECK_THROWS_AS(parseFormula("Inf(a) &", names), ParseError);
}
