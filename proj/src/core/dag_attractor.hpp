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

#include <optional>

#include "certificate.hpp"
#include "el_automaton.hpp"
#include "game.hpp"
#include "permutation.hpp"

namespace oblige {

// Real nodes are pairs (arena node, permutation rank) indexed densely.
struct RealNodeSpace {
    int nodeCount = 0;
    int permCount = 0;

    int size() const { return nodeCount * permCount; }
    int id(int v, int rank) const { return v * permCount + rank; }
    std::pair<int, int> decode(int id) const { return {id / permCount, id % permCount}; }
};

using RealNodeSet = std::vector<char>;

// Indexed family of real-node sets, one per priority 0..2d+1.
struct AttractorArgument {
    std::vector<RealNodeSet> byPriority;

    static AttractorArgument allOf(const RealNodeSpace& space, int priorities, bool full);
    bool subsetOf(const AttractorArgument& o) const;
};

// Shared per-game precomputation: the permutation table over the strong
// colors, the rightmost position of each edge's strong colors per rank, and
// the classified conjunction of the two objectives.
class SolverContext {
  public:
    explicit SolverContext(const ObligingGame& game, int maxTrackedColors = 4);

    const ObligingGame& game() const { return *game_; }
    const PermutationTable& table() const { return table_; }
    const RealNodeSpace& space() const { return space_; }
    const Formula& conjunction() const { return conjunction_; }
    const AcceptanceClass& conjunctionClass() const { return conjClass_; }
    int edgePosition(int rank, int edgeIdx) const { return edgePos_[rank][edgeIdx]; }
    int priorityCount() const { return 2 * table_.d() + 2; }
    // Whether any permutation and position can produce this exit priority;
    // fixpoint variables at unrealizable priorities are inert.
    bool priorityRealizable(int p) const { return realizable_[p]; }

  private:
    const ObligingGame* game_;
    PermutationTable table_;
    RealNodeSpace space_;
    Formula conjunction_;
    AcceptanceClass conjClass_;
    std::vector<std::vector<int>> edgePos_;  // [rank][edge]
    std::vector<char> realizable_;
};

struct PerPermutationResult {
    std::vector<char> nodes;               // arena nodes whose (v,0) vertex survived
    std::vector<std::optional<Lasso>> witness;  // raw witness lassos, when requested
};

// One execution of the four-step procedure for a fixed permutation:
// fingerprint graph, unsafe-vertex removal, per-position certificate-loop
// automata, safe-stem reachability. witnessFor restricts witness assembly to
// the flagged arena nodes (null: all winners).
PerPermutationResult dagAttractorForPermutation(const SolverContext& ctx, int rank,
                                                const AttractorArgument& arg, bool wantWitness,
                                                const std::vector<char>* witnessFor = nullptr);

struct DagAttractorResult {
    RealNodeSet attracted;
    // Normalized certificates per attracted real node, when requested.
    std::vector<std::optional<Certificate>> certificates;
};

// Union over all permutations of the per-permutation results. certificateFor
// restricts extraction to the flagged real nodes (null: all winners).
DagAttractorResult dagAttractor(const SolverContext& ctx, const AttractorArgument& arg,
                                bool wantCertificates,
                                const RealNodeSet* certificateFor = nullptr);

}  // namespace oblige
