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

#include <vector>

#include "common.hpp"
#include "formula.hpp"

namespace oblige {

// Single-letter omega-automaton with Emerson-Lei acceptance over transition
// colors. Deadlock states are permitted (they are simply empty).
struct ELAutomaton {
    struct Transition {
        int dst;
        ColorSet colors;
    };

    std::vector<std::vector<Transition>> out;
    Formula acceptance;
    int colorCount = 0;
    int initial = -1;  // optional

    int stateCount() const { return (int)out.size(); }
};

// Run skeleton: stem from a query state, then a repeated cycle. Automata
// may carry parallel transitions, so the chosen loop transition colors are
// recorded explicitly: loopColors[i] belongs to the move from loop[i] to
// loop[i+1] (the last entry to the closing move).
struct AcceptingLasso {
    std::vector<int> stem;
    std::vector<int> loop;
    std::vector<ColorSet> loopColors;
};

// One side of a Rabin/Streett pair: "some color of the set recurs", or a
// constant. Constants encode the two extra pairs of the Rabin-and-Streett
// emptiness reduction.
struct ColorCondition {
    enum class Kind { Set, Always, Never };
    Kind kind = Kind::Set;
    ColorSet set;

    static ColorCondition colors(ColorSet s) { return {Kind::Set, s}; }
    static ColorCondition always() { return {Kind::Always, {}}; }
    static ColorCondition never() { return {Kind::Never, {}}; }

    bool meets(ColorSet infSet) const
    {
        switch (kind) {
            case Kind::Always: return true;
            case Kind::Never: return false;
            case Kind::Set: return set.intersects(infSet);
        }
        return false;
    }
};

// Streett reading: left met implies right met. Rabin reading: left avoided
// and right met.
struct SRPair {
    ColorCondition left, right;
};

// Structural acceptance classes detected on the formula AST. Unclassifiable
// formulas fall back to the generic subset-enumeration algorithm.
struct AcceptanceClass {
    enum class Kind { ConstTrue, ConstFalse, GenBuchi, Streett, Rabin, RabinAndStreett, Generic };
    Kind kind = Kind::Generic;
    ColorSet genBuchiColors;
    std::vector<SRPair> streett;
    std::vector<SRPair> rabin;
};

AcceptanceClass classifyAcceptance(const Formula& phi);

// A strongly connected, cyclic state set whose internal transition colors
// realize an accepting infinity set.
struct GoodComponent {
    std::vector<int> states;
    ColorSet colors;
};

std::vector<GoodComponent> goodComponents(const ELAutomaton& aut, const AcceptanceClass& cls);

// States from which an accepting lasso exists: backward closure of the good
// components under the chosen class.
std::vector<char> nonemptyStatesWithClass(const ELAutomaton& aut, const AcceptanceClass& cls);
std::vector<char> nonemptyStates(const ELAutomaton& aut);

// Reference algorithm: per-SCC enumeration of candidate infinity sets.
// Guarded at 16 colors.
std::vector<char> nonemptyStatesGeneric(const ELAutomaton& aut);

// Whole-automaton emptiness: judged from the initial state when set,
// otherwise from all states. The class-specific variants reject automata
// whose acceptance does not structurally match the class.
bool isEmptyGenBuchi(const ELAutomaton& aut);
bool isEmptyRabin(const ELAutomaton& aut);
bool isEmptyStreett(const ELAutomaton& aut);
bool isEmptyGeneric(const ELAutomaton& aut);

// Conjunction of a Rabin and a Streett condition, checked through one
// Streett run per Rabin pair with the two extra pairs (Always, F_i) and
// (E_i, Never). Empty Rabin pair list means empty language.
std::vector<char> nonemptyStatesRabinAndStreett(const ELAutomaton& aut,
                                                const std::vector<SRPair>& rabinPairs,
                                                const std::vector<SRPair>& streettPairs);
bool isEmptyRabinAndStreett(const ELAutomaton& aut, const std::vector<SRPair>& rabinPairs,
                            const std::vector<SRPair>& streettPairs);

// Accepting lasso from a nonempty state; loop visits every color of the
// target component, so its length stays within (|colors|+1)*(|Q|+1).
// Throws if the state is empty.
AcceptingLasso witnessLasso(const ELAutomaton& aut, int state);
AcceptingLasso witnessLassoWithClass(const ELAutomaton& aut, const AcceptanceClass& cls, int state);

// Postcondition check used by tests and assertions.
ColorSet lassoInfinitySetAut(const ELAutomaton& aut, const AcceptingLasso& lasso);

// Debug text format, mirroring the game format minus owners.
std::string automatonToText(const ELAutomaton& aut, const std::vector<std::string>& colorNames);

}  // namespace oblige
