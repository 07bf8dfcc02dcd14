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

// Lasso-shaped witness with a designated anchor: stem[0] is the node the
// certificate belongs to. Both parts nonempty; the play it denotes is
// stem · loop^omega.
struct Certificate {
    std::vector<int> stem;
    std::vector<int> loop;

    int length() const { return (int)(stem.size() + loop.size()); }
    int nodeAt(int pos) const
    {
        return pos < (int)stem.size() ? stem[pos] : loop[pos - (int)stem.size()];
    }
    // Successor position, wrapping from the loop end back to the loop start.
    int nextPos(int pos) const { return pos + 1 < length() ? pos + 1 : (int)stem.size(); }

    std::string toString(const ObligingGame& game) const;
};

// n*d + (d+k+1)*(n+1): upper bound on certificate size.
long certLenParams(long n, long d, long k);
long certLen(const ObligingGame& game);

// Structural well-formedness (edges present, parts nonempty). Throws
// StructuralError; never judges acceptance.
void validateCertificate(const Certificate& cert, const ObligingGame& game);

// True iff the certificate's infinity set satisfies both objectives.
// Structural problems throw; acceptance failure returns false.
bool isValidCertificate(const Certificate& cert, const ObligingGame& game);

// Extracts a bounded valid certificate from a lasso witness that satisfies
// both objectives: the stem is the witness prefix with fingerprint-preserving
// loops removed, the loop walks the infinitely-visited subgraph visiting
// every recurring strong/weak color. Deterministic. Throws if the witness
// fails an objective (message names the failing one).
Certificate extractCertificate(const Lasso& witness, const ObligingGame& game);

// Max occurrences of any single node within stem+loop (memory-bound input).
int maxNodeOccurrences(const Certificate& cert);

}  // namespace oblige
