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

#include "formula.hpp"

namespace oblige {

Formula Formula::conjAll(const std::vector<Formula>& fs)
{
    if (fs.empty()) return t();
    Formula acc = fs[0];
    for (size_t i = 1; i < fs.size(); i++) acc = conj(acc, fs[i]);
    return acc;
}

Formula Formula::disjAll(const std::vector<Formula>& fs)
{
    if (fs.empty()) return f();
    Formula acc = fs[0];
    for (size_t i = 1; i < fs.size(); i++) acc = disj(acc, fs[i]);
    return acc;
}

bool Formula::eval(ColorSet infSet) const
{
    switch (kind_) {
        case Kind::True: return true;
        case Kind::False: return false;
        case Kind::Inf: return infSet.has(color_);
        case Kind::Fin: return !infSet.has(color_);
        case Kind::And: return lhs_->eval(infSet) && rhs_->eval(infSet);
        case Kind::Or: return lhs_->eval(infSet) || rhs_->eval(infSet);
    }
    return false;
}

Formula Formula::negated() const
{
    switch (kind_) {
        case Kind::True: return f();
        case Kind::False: return t();
        case Kind::Inf: return fin(color_);
        case Kind::Fin: return inf(color_);
        case Kind::And: return disj(lhs_->negated(), rhs_->negated());
        case Kind::Or: return conj(lhs_->negated(), rhs_->negated());
    }
    return t();
}

ColorSet Formula::colors() const
{
    switch (kind_) {
        case Kind::True:
        case Kind::False: return ColorSet();
        case Kind::Inf:
        case Kind::Fin: return ColorSet::single(color_);
        case Kind::And:
        case Kind::Or: return lhs_->colors().unionWith(rhs_->colors());
    }
    return ColorSet();
}

bool Formula::operator==(const Formula& o) const
{
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::True:
        case Kind::False: return true;
        case Kind::Inf:
        case Kind::Fin: return color_ == o.color_;
        case Kind::And:
        case Kind::Or: return *lhs_ == *o.lhs_ && *rhs_ == *o.rhs_;
    }
    return false;
}

namespace {

std::string colorName(ColorId c, const std::vector<std::string>& names)
{
    if (c >= 0 && c < (int)names.size()) return names[c];
    return "c" + std::to_string(c);
}

// Precedence: Or = 0, And = 1, atoms = 2.
std::string printRec(const Formula& f, const std::vector<std::string>& names, int parentPrec)
{
    switch (f.kind()) {
        case Formula::Kind::True: return "true";
        case Formula::Kind::False: return "false";
        case Formula::Kind::Inf: return "Inf(" + colorName(f.color(), names) + ")";
        case Formula::Kind::Fin: return "Fin(" + colorName(f.color(), names) + ")";
        case Formula::Kind::And: {
            std::string s = printRec(f.lhs(), names, 1) + " & " + printRec(f.rhs(), names, 1);
            return parentPrec > 1 ? "(" + s + ")" : s;
        }
        case Formula::Kind::Or: {
            std::string s = printRec(f.lhs(), names, 0) + " | " + printRec(f.rhs(), names, 0);
            return parentPrec > 0 ? "(" + s + ")" : s;
        }
    }
    return "?";
}

}  // namespace

std::string Formula::toString(const std::vector<std::string>& colorNames) const
{
    return printRec(*this, colorNames, 0);
}

Formula streettFormula(const std::vector<std::pair<ColorId, ColorId>>& pairs)
{
    if (pairs.empty()) throw Error("streett: empty pair list");
    std::vector<Formula> clauses;
    for (auto [a, b] : pairs) clauses.push_back(Formula::disj(Formula::fin(a), Formula::inf(b)));
    return Formula::conjAll(clauses);
}

Formula rabinFormula(const std::vector<std::pair<ColorId, ColorId>>& pairs)
{
    if (pairs.empty()) throw Error("rabin: empty pair list");
    std::vector<Formula> clauses;
    for (auto [a, b] : pairs) clauses.push_back(Formula::conj(Formula::fin(a), Formula::inf(b)));
    return Formula::disjAll(clauses);
}

Formula genBuchiFormula(const std::vector<ColorId>& colors)
{
    if (colors.empty()) throw Error("genBuchi: empty color list");
    std::vector<Formula> atoms;
    for (ColorId c : colors) atoms.push_back(Formula::inf(c));
    return Formula::conjAll(atoms);
}

Formula buchiFormula(ColorId c) { return Formula::inf(c); }

Formula parityFormula(const std::vector<ColorId>& priorities)
{
    if (priorities.empty()) throw Error("parity: empty priority list");
    std::vector<Formula> disjuncts;
    for (size_t i = 0; i < priorities.size(); i += 2) {
        Formula d = Formula::inf(priorities[i]);
        for (size_t j = i + 1; j < priorities.size(); j++)
            d = Formula::conj(d, Formula::fin(priorities[j]));
        disjuncts.push_back(d);
    }
    return Formula::disjAll(disjuncts);
}

Formula gr1Formula(const std::vector<ColorId>& requests, const std::vector<ColorId>& grants)
{
    if (requests.empty() || grants.empty()) throw Error("gr1: empty request or grant list");
    std::vector<Formula> avoided;
    for (ColorId r : requests) avoided.push_back(Formula::fin(r));
    std::vector<Formula> granted;
    for (ColorId g : grants) granted.push_back(Formula::inf(g));
    return Formula::disj(Formula::disjAll(avoided), Formula::conjAll(granted));
}

}  // namespace oblige
