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

#include <map>
#include <optional>
#include <tuple>

#include "solver.hpp"

namespace oblige {

// Finite-memory Mealy strategy over an arena. Memory states are opaque to
// the verifier; extraction labels them with (anchor, permutation, position).
struct MealyStrategy {
    int memoryCount = 0;
    std::vector<std::string> memoryLabels;
    std::map<int, int> initialMemory;               // covered node -> memory
    std::map<std::pair<int, int>, int> move;        // (memory, exists-node) -> successor
    std::map<std::tuple<int, int, int>, int> update;  // (memory, src, dst) -> memory

    bool covers(int node) const { return initialMemory.count(node) != 0; }
};

struct ExtractionInfo {
    long reachableMemoryCount = 0;
    // Distinct (anchor, permutation, occurrence-index) values over the
    // reachable memories; the occurrence index replaces the position.
    long compressedMemoryCount = 0;
};

// Theorem-style extraction: memory walks the recorded certificate of the
// current anchor, deviations re-anchor at the deviation target with the
// permutation shifted by the traversed prefix fingerprint plus the deviating
// edge. Requires certificates for every winning real node.
std::pair<MealyStrategy, ExtractionInfo> extractStrategy(const ObligingGame& game,
                                                         const SolveResult& solved);

struct VerificationReport {
    bool strongOk = false;
    bool graciousOk = false;
    long reachableMemoryCount = 0;
    long productStateCount = 0;
    std::optional<Lasso> counterexample;  // strong violation, arena nodes
    std::string stuckState;               // first weak-unreachable product state
};

// Product of arena and strategy memory; strong holds iff the product with
// the negated strong objective is empty, gracious iff every reachable
// product state can still reach a weak-accepting cycle.
VerificationReport verifyStrategy(const ObligingGame& game, const MealyStrategy& strategy);

std::string serializeStrategy(const MealyStrategy& s, const ObligingGame& game);
MealyStrategy parseStrategy(const std::string& text, const ObligingGame& game);

}  // namespace oblige
