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

#include "dag_attractor.hpp"

namespace oblige {

struct SolveOptions {
    // Factorial memory guard: the strong objective may use at most this
    // many colors.
    int maxStrongColors = 4;
    bool recordCertificates = true;
};

struct SolveStats {
    long attractorCalls = 0;
    std::vector<long> iterationsPerLevel;
    double seconds = 0.0;
};

struct SolveResult {
    std::vector<char> winningRegion;  // per arena node
    // Lemma-3-normalized certificate per winning real node (node, rank).
    std::map<std::pair<int, int>, Certificate> certificates;
    RealNodeSet fixpoint;  // winning real nodes
    int permCount = 0;
    int initialRank = 0;
    SolveStats stats;
};

// Gracious winning region via the nested fixpoint of the DAG attractor over
// real nodes: greatest-fixpoint variables at even priorities, least at odd,
// innermost priority 0. Certificates are recorded in one extra attractor
// sweep after stabilization and re-checked for exit safety.
SolveResult solveObliging(const ObligingGame& game, const SolveOptions& opts = {});

// JSON solve report (versioned schema).
std::string solveReportJson(const ObligingGame& game, const SolveResult& result,
                            const std::string& engine);

}  // namespace oblige
