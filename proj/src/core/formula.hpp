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

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace oblige {

// Positive Boolean combination of Inf/Fin atoms over edge colors, evaluated
// on the set of colors occurring infinitely often. True/False constants cover
// degenerate objectives. Immutable value type; subtrees are shared.
class Formula {
  public:
    enum class Kind { True, False, Inf, Fin, And, Or };

    Formula() : kind_(Kind::True) {}

    static Formula t() { return Formula(Kind::True); }
    static Formula f() { return Formula(Kind::False); }
    static Formula inf(ColorId c) { return Formula(Kind::Inf, c); }
    static Formula fin(ColorId c) { return Formula(Kind::Fin, c); }
    static Formula conj(Formula a, Formula b) { return Formula(Kind::And, std::move(a), std::move(b)); }
    static Formula disj(Formula a, Formula b) { return Formula(Kind::Or, std::move(a), std::move(b)); }

    // Conjunction/disjunction over a list; empty list gives the neutral element.
    static Formula conjAll(const std::vector<Formula>& fs);
    static Formula disjAll(const std::vector<Formula>& fs);

    Kind kind() const { return kind_; }
    ColorId color() const { return color_; }
    const Formula& lhs() const { return *lhs_; }
    const Formula& rhs() const { return *rhs_; }

    // Truth value under the interpretation "Inf c iff c is in infSet".
    bool eval(ColorSet infSet) const;

    // Dual formula: Inf<->Fin, And<->Or, True<->False. For every I,
    // negated().eval(I) == !eval(I).
    Formula negated() const;

    // All color ids referenced by atoms.
    ColorSet colors() const;

    bool operator==(const Formula& o) const;

    std::string toString(const std::vector<std::string>& colorNames) const;

  private:
    explicit Formula(Kind k, ColorId c = -1) : kind_(k), color_(c) {}
    Formula(Kind k, Formula a, Formula b)
        : kind_(k),
          lhs_(std::make_shared<Formula>(std::move(a))),
          rhs_(std::make_shared<Formula>(std::move(b)))
    {
    }

    Kind kind_;
    ColorId color_ = -1;
    std::shared_ptr<const Formula> lhs_, rhs_;
};

// Standard objective classes as Emerson-Lei formulas.

// Streett pairs (a_i, b_i): for each pair, Fin a_i | Inf b_i.
Formula streettFormula(const std::vector<std::pair<ColorId, ColorId>>& pairs);

// Rabin pairs (a_i, b_i): some pair with Fin a_i & Inf b_i.
Formula rabinFormula(const std::vector<std::pair<ColorId, ColorId>>& pairs);

// Conjunction of Inf c over the given colors.
Formula genBuchiFormula(const std::vector<ColorId>& colors);

Formula buchiFormula(ColorId c);

// Max-parity over priorities[0..k] (index = priority): some even priority
// visited infinitely often while all higher ones are visited finitely often.
Formula parityFormula(const std::vector<ColorId>& priorities);

// GR[1]: (some request eventually avoided) or (all grants infinitely often).
Formula gr1Formula(const std::vector<ColorId>& requests, const std::vector<ColorId>& grants);

}  // namespace oblige
