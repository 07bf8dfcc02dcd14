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

#include "certificate.hpp"
#include "game.hpp"

namespace oblige {

struct ExplicitOracleOptions {
    long stemBound = -1;       // node count; -1 = n*d + 1
    long loopBound = -1;       // node count; -1 = (d+k+1)*(n+1)
    long certificateBudget = 100000;
    long maxProductNodes = 2000000;
};

// All valid certificates anchored at each node within the bounds, pruned to
// stems without repeated (node, strong-fingerprint) states and loops without
// repeated (node, covered-colors) states. Every valid certificate shrinks to
// such a representative with a subset of its challenger exits, so the pruned
// certificate game has the same winning region.
std::vector<std::vector<Certificate>> enumerateCertificates(const ObligingGame& game,
                                                            const ExplicitOracleOptions& opts);

// Tiny-instance reference solver: materializes the certificate game (one
// challenger node per certificate, exit nodes per universal position
// carrying the stem fingerprint, give-up loops on a fresh color), paritizes
// its winning-by-acceptance-or-give-up objective and solves it.
std::vector<char> oracleExplicitCertificateGame(const ObligingGame& game,
                                                const ExplicitOracleOptions& opts = {});

}  // namespace oblige
