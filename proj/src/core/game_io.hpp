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

#include <cstdint>
#include <string>

#include "game.hpp"

namespace oblige {

// Text format (.oblige), line oriented:
//
//   oblige 1
//   nodes: <n>
//   names: <name...>            # optional, defaults to v0..v{n-1}
//   owners: <E/A string, one per node>
//   colors: <name...>           # may be empty
//   edge <src> <dst> {c1,c2}    # src/dst are node names or indices; {} for none
//   strong: <formula>
//   weak: <formula>
//
// Formula grammar: Inf(c) | Fin(c) | true | false, '&' binds tighter than
// '|', parentheses allowed. '#' starts a comment.
ObligingGame parseGame(const std::string& text);
std::string serializeGame(const ObligingGame& game);

// Parses a formula over the game's color names (used by tests and tools).
Formula parseFormula(const std::string& text, const std::vector<std::string>& colorNames);

// The worked examples from the literature, by name:
//   ex1         five-node Streett/generalized-Buchi game
//   ex1-dashed  ex1 plus the extra v5 -> v4 edge
//   ex10        three-node certificate-extraction example
ObligingGame fixture(const std::string& name);

enum class ObjectiveClass { Buchi, GenBuchi, Streett, Rabin, Parity, GR1, EL };
ObjectiveClass objectiveClassFromName(const std::string& name);
std::string objectiveClassName(ObjectiveClass c);

// Seeded random instance; identical parameters give structurally identical
// games. Every node keeps at least one outgoing edge; edge colors are drawn
// from the union of the two objectives' colors.
ObligingGame randomGame(uint64_t seed, int nodeCount, int colorCount, double edgeDensity,
                        ObjectiveClass strongClass, ObjectiveClass weakClass);

}  // namespace oblige
