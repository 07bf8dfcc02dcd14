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

#include "permutation.hpp"

#include <algorithm>
#include <array>

namespace oblige {

int Permutation::rightmostPosition(ColorSet d) const
{
    for (int p = size(); p >= 1; p--)
        if (d.has(at(p))) return p;
    return 0;
}

ColorSet Permutation::prefixSet(int i) const
{
    ColorSet s;
    for (int p = 1; p <= i; p++) s.add(at(p));
    return s;
}

Permutation Permutation::shiftedBy(ColorSet d) const
{
    return shiftedByPosition(rightmostPosition(d));
}

Permutation Permutation::shiftedByPosition(int position) const
{
    if (position <= 0) return *this;
    std::vector<ColorId> next = order_;
    ColorId moved = next[position - 1];
    next.erase(next.begin() + (position - 1));
    next.insert(next.begin(), moved);
    return Permutation(std::move(next));
}

int Permutation::priorityOf(ColorSet d, const Formula& phi) const
{
    int p = rightmostPosition(d);
    return 2 * p + (phi.eval(prefixSet(p)) ? 0 : 1);
}

PermutationTable::PermutationTable(const std::vector<ColorId>& colors, const Formula& phi)
    : d_((int)colors.size())
{
    if (d_ > 8) throw GuardError("permutation table: more than 8 tracked colors");

    std::vector<ColorId> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ColorId> order = sorted;
    do {
        rankIndex_[order] = (int)perms_.size();
        perms_.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));

    initialRank_ = rankIndex_.at(colors);

    shiftToFront_.resize(perms_.size());
    prefixSat_.resize(perms_.size());
    prefixSets_.resize(perms_.size());
    posOfColor_.resize(perms_.size());
    for (int r = 0; r < (int)perms_.size(); r++) {
        Permutation pi(perms_[r]);
        shiftToFront_[r].resize(d_ + 1);
        prefixSat_[r].resize(d_ + 1);
        prefixSets_[r].resize(d_ + 1);
        posOfColor_[r].fill(-1);
        for (int p = 0; p <= d_; p++) {
            shiftToFront_[r][p] = rankIndex_.at(pi.shiftedByPosition(p).order());
            ColorSet prefix = pi.prefixSet(p);
            prefixSets_[r][p] = prefix;
            prefixSat_[r][p] = phi.eval(prefix) ? 1 : 0;
        }
        for (int p = 1; p <= d_; p++) posOfColor_[r][pi.at(p)] = (int8_t)p;
    }
}

int PermutationTable::rankOf(const std::vector<ColorId>& order) const
{
    auto it = rankIndex_.find(order);
    if (it == rankIndex_.end()) throw InternalError("permutation table: unknown ordering");
    return it->second;
}

int PermutationTable::rightmostPos(int rank, ColorSet d) const
{
    int best = 0;
    for (ColorId c : d.toList()) {
        int8_t p = posOfColor_[rank][c];
        if (p > best) best = p;
    }
    return best;
}

}  // namespace oblige
