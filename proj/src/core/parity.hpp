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

#include <string>
#include <vector>

#include "game.hpp"
#include "permutation.hpp"

namespace oblige {

// Max-parity game with priorities on edges.
struct ParityGame {
    struct PEdge {
        int src;
        int dst;
        int priority;
    };

    std::vector<Owner> owners;
    std::vector<PEdge> edges;

    int nodeCount() const { return (int)owners.size(); }
    void validate() const;
    std::string toText() const;  // debug format
};

struct ZielonkaResult {
    // winner[v]: 0 = player exists, 1 = player forall.
    std::vector<int> winner;
    // Positional strategies: chosen successor per owned, won node; -1 elsewhere.
    std::vector<int> strategyExists;
    std::vector<int> strategyForall;
};

// Standard recursive attractor-based solver.
ZielonkaResult zielonkaSolve(const ParityGame& pg);

// Generic Emerson-Lei game (arena with colored edges plus one objective).
struct ELGame {
    Arena arena;
    Formula objective;
};

// Lazy LAR paritization. Product nodes are (base node, permutation of the
// tracked colors) reachable from every (v, initial); edge priorities follow
// the rightmost touched position convention, with priority 0/1 for untouched
// moves depending on the objective's value on the empty set.
struct ParitizeResult {
    ParityGame pg;
    std::vector<std::pair<int, int>> productToBase;  // product node -> (base, rank)
    std::vector<int> entryNode;                      // base node -> product id of (v, initial)
    int permCount = 0;
};

ParitizeResult paritize(const ELGame& game, const std::vector<ColorId>& initialOrder);
ParitizeResult paritize(const ELGame& game);  // initial = tracked colors in id order

}  // namespace oblige
