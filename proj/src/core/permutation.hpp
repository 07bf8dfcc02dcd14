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

#include <array>
#include <map>
#include <vector>

#include "common.hpp"
#include "formula.hpp"

namespace oblige {

// Later-appearance-record memory: an ordering of a fixed color set,
// positions 1..d. The lazy shift moves only the rightmost touched color.
class Permutation {
  public:
    explicit Permutation(std::vector<ColorId> order) : order_(std::move(order)) {}

    int size() const { return (int)order_.size(); }
    ColorId at(int position) const { return order_[position - 1]; }  // positions 1..d
    const std::vector<ColorId>& order() const { return order_; }

    // Rightmost position holding a color of D; 0 when D misses all of them.
    int rightmostPosition(ColorSet d) const;

    // Colors at the first i positions; prefixSet(0) is empty.
    ColorSet prefixSet(int i) const;

    // pi@D: move the rightmost element of D to the front; identity on
    // disjoint or empty D.
    Permutation shiftedBy(ColorSet d) const;
    Permutation shiftedByPosition(int position) const;

    // 2p if the prefix at the rightmost touched position satisfies phi,
    // else 2p+1; empty touch gives p = 0.
    int priorityOf(ColorSet d, const Formula& phi) const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<ColorId> order_;
};

// All permutations over a fixed color list with precomputed shift and
// prefix-evaluation tables; ranks are dense ids used as solver memory.
class PermutationTable {
  public:
    PermutationTable(const std::vector<ColorId>& colors, const Formula& phi);

    int count() const { return (int)perms_.size(); }
    int d() const { return d_; }
    int initialRank() const { return initialRank_; }
    const std::vector<ColorId>& perm(int rank) const { return perms_[rank]; }
    Permutation permutation(int rank) const { return Permutation(perms_[rank]); }
    int rankOf(const std::vector<ColorId>& order) const;

    int rightmostPos(int rank, ColorSet d) const;
    int shiftByPos(int rank, int position) const { return shiftToFront_[rank][position]; }
    int shiftBy(int rank, ColorSet d) const { return shiftByPos(rank, rightmostPos(rank, d)); }
    // Priority of seeing a set whose rightmost touched position is p.
    int priorityAt(int rank, int p) const { return 2 * p + (prefixSat_[rank][p] ? 0 : 1); }
    ColorSet prefixSet(int rank, int p) const { return prefixSets_[rank][p]; }

  private:
    int d_;
    int initialRank_;
    std::vector<std::vector<ColorId>> perms_;
    std::map<std::vector<ColorId>, int> rankIndex_;
    std::vector<std::vector<int>> shiftToFront_;   // [rank][pos 0..d]
    std::vector<std::vector<char>> prefixSat_;     // [rank][pos 0..d]
    std::vector<std::vector<ColorSet>> prefixSets_;
    std::vector<std::array<int8_t, ColorSet::kMaxColors>> posOfColor_;
};

}  // namespace oblige
