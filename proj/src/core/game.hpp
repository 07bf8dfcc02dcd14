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
#include <span>
#include <string>
#include <vector>

#include "common.hpp"
#include "formula.hpp"

namespace oblige {

enum class Owner : uint8_t { Exists, Forall };

struct Edge {
    int src;
    int dst;
    ColorSet colors;
};

// Two-player arena with colored edges. Every node has at least one outgoing
// edge; parallel edges are merged by color union on construction.
class Arena {
  public:
    Arena(int nodeCount, std::vector<Owner> owners, std::vector<Edge> edges);

    int nodeCount() const { return nodeCount_; }
    Owner owner(int v) const { return owners_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_[idx]; }

    // Indices of outgoing edges of v, sorted by target.
    std::span<const int> out(int v) const
    {
        return {outIndex_.data() + outStart_[v], (size_t)(outStart_[v + 1] - outStart_[v])};
    }

    // Edge index of (v,w), if present.
    std::optional<int> edgeBetween(int v, int w) const;

  private:
    int nodeCount_;
    std::vector<Owner> owners_;
    std::vector<Edge> edges_;
    std::vector<int> outIndex_;
    std::vector<int> outStart_;
};

// Finite lasso-shaped play: an optional stem followed by a nonempty loop,
// denoting stem · loop^omega.
struct Lasso {
    std::vector<int> stem;
    std::vector<int> loop;
};

// An arena together with a strong and a weak Emerson-Lei objective. The
// strong color set S and weak color set W are derived from the formulas;
// color ids are interned in declaration order of colorNames.
class ObligingGame {
  public:
    ObligingGame(Arena arena, std::vector<std::string> nodeNames,
                 std::vector<std::string> colorNames, Formula strong, Formula weak);

    const Arena& arena() const { return arena_; }
    int nodeCount() const { return arena_.nodeCount(); }
    const Formula& strong() const { return strong_; }
    const Formula& weak() const { return weak_; }

    ColorSet strongColors() const { return strongColors_; }
    ColorSet weakColors() const { return weakColors_; }
    // Strong colors in declaration order; basis for all permutation memory.
    const std::vector<ColorId>& strongColorList() const { return strongColorList_; }
    int d() const { return (int)strongColorList_.size(); }
    int k() const { return weakColors_.count(); }

    const std::vector<std::string>& nodeNames() const { return nodeNames_; }
    const std::vector<std::string>& colorNames() const { return colorNames_; }
    const std::string& nodeName(int v) const { return nodeNames_[v]; }
    std::optional<int> nodeByName(const std::string& name) const;
    std::optional<ColorId> colorByName(const std::string& name) const;

    std::string pathToString(std::span<const int> nodes) const;

  private:
    Arena arena_;
    std::vector<std::string> nodeNames_;
    std::vector<std::string> colorNames_;
    Formula strong_, weak_;
    ColorSet strongColors_, weakColors_;
    std::vector<ColorId> strongColorList_;
};

// Checks that consecutive nodes are connected, including the loop-closing
// edge and the stem/loop junction. Throws StructuralError naming the first
// offending pair.
void validateLasso(const Lasso& lasso, const ObligingGame& game);

// Colors occurring infinitely often on the play stem · loop^omega: the union
// of colors on loop edges including the closing edge.
ColorSet lassoInfinitySet(const Lasso& lasso, const ObligingGame& game);

// Union of (edge colors ∩ restrictTo) over consecutive edges of a finite
// play; a single node has empty fingerprint.
ColorSet pathFingerprint(std::span<const int> path, ColorSet restrictTo, const ObligingGame& game);

}  // namespace oblige
