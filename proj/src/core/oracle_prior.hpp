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

#include "game.hpp"

namespace oblige {

struct PriorOracleOptions {
    int maxWeakColors = 8;       // 2^k guess states
    long maxProductNodes = 500000;  // paritized game size guard
};

// Independent solver through the classic small-step route: the weak
// objective is encoded by a guess-and-verify Buchi automaton (wait, then
// commit to a satisfying color set and cycle a pointer through it), the
// system player additionally announces its intended next move, and the
// challenger pays a fresh Buchi color whenever it deviates from the
// announcement. The product game with objective strong-and-Buchi is
// paritized and solved with the recursive parity solver.
std::vector<char> oraclePriorReduction(const ObligingGame& game,
                                       const PriorOracleOptions& opts = {});

// Number of states of the weak-objective automaton (waiting state plus one
// pointer state per color of each satisfying set).
int priorWeakAutomatonStates(const ObligingGame& game, const PriorOracleOptions& opts = {});

}  // namespace oblige
