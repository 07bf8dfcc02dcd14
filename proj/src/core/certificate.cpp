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

#include "certificate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oblige {

std::string Certificate::toString(const ObligingGame& game) const
{
    return game.pathToString(stem) + " ~ " + game.pathToString(loop);
}

long certLenParams(long n, long d, long k) { return n * d + (d + k + 1) * (n + 1); }

long certLen(const ObligingGame& game)
{
    return certLenParams(game.nodeCount(), game.d(), game.k());
}

void validateCertificate(const Certificate& cert, const ObligingGame& game)
{
    if (cert.stem.empty()) throw StructuralError("certificate: empty stem");
    validateLasso(Lasso{cert.stem, cert.loop}, game);
}

bool isValidCertificate(const Certificate& cert, const ObligingGame& game)
{
    validateCertificate(cert, game);
    ColorSet inf = lassoInfinitySet(Lasso{cert.stem, cert.loop}, game);
    return game.strong().eval(inf) && game.weak().eval(inf);
}

int maxNodeOccurrences(const Certificate& cert)
{
    std::map<int, int> counts;
    for (int v : cert.stem) counts[v]++;
    for (int v : cert.loop) counts[v]++;
    int best = 0;
    for (auto& [v, c] : counts) best = std::max(best, c);
    return best;
}

namespace {

// Edge-restricted view of the infinitely-visited subgraph (V_pi, E_pi).
struct LoopGraph {
    const ObligingGame& game;
    std::set<int> nodes;
    std::set<int> edgeIdx;
};

struct AnnotatedPrefix {
    std::vector<int> nodes;
    std::vector<ColorSet> fps;  // S-fingerprint of nodes[0..i]
};

// Repeatedly remove subsequences between equal (node, fingerprint) pairs:
// leftmost repeat first, longest deletable span.
void removeFingerprintRepeats(AnnotatedPrefix& p)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < p.nodes.size() && !changed; i++) {
            size_t best = i;
            for (size_t j = i + 1; j < p.nodes.size(); j++)
                if (p.nodes[j] == p.nodes[i] && p.fps[j] == p.fps[i]) best = j;
            if (best != i) {
                p.nodes.erase(p.nodes.begin() + i + 1, p.nodes.begin() + best + 1);
                p.fps.erase(p.fps.begin() + i + 1, p.fps.begin() + best + 1);
                changed = true;
            }
        }
    }
}

// Shortest closed walk from the anchor back to itself that covers every
// target color: breadth-first search over (node, covered-so-far) states.
// Shortest walks visit distinct product states, which keeps per-node
// occurrence counts low for the strategy memory bound.
std::vector<int> shortestCoveringWalk(const LoopGraph& lg, int anchor, ColorSet target)
{
    const Arena& arena = lg.game.arena();
    struct State {
        int node;
        ColorSet covered;
        auto operator<=>(const State&) const = default;
    };
    std::map<State, State> parent;
    std::vector<State> frontier = {{anchor, ColorSet()}};
    parent[{anchor, ColorSet()}] = {-1, ColorSet()};
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<State> next;
        for (const State& s : frontier) {
            for (int e : arena.out(s.node)) {
                if (!lg.edgeIdx.count(e)) continue;
                State to{arena.edge(e).dst,
                         s.covered.unionWith(arena.edge(e).colors.intersect(target))};
                if (to.node == anchor && to.covered == target) {
                    std::vector<int> walk;
                    for (State x = s; x.node != -1; x = parent.at(x)) walk.push_back(x.node);
                    std::reverse(walk.begin(), walk.end());
                    walk.push_back(anchor);
                    return {walk.begin() + 1, walk.end()};  // drop the starting anchor
                }
                if (parent.count(to)) continue;
                parent[to] = s;
                next.push_back(to);
            }
        }
        frontier = std::move(next);
    }
    return {};
}

}  // namespace

Certificate extractCertificate(const Lasso& witness, const ObligingGame& game)
{
    validateLasso(witness, game);
    ColorSet witnessInf = lassoInfinitySet(witness, game);
    if (!game.strong().eval(witnessInf))
        throw Error("extractCertificate: witness does not satisfy the strong objective");
    if (!game.weak().eval(witnessInf))
        throw Error("extractCertificate: witness does not satisfy the weak objective");

    const Arena& arena = game.arena();
    ColorSet strongSet = game.strongColors();

    // All strong colors the witness ever visits, transient ones included.
    std::vector<int> once = witness.stem;
    once.insert(once.end(), witness.loop.begin(), witness.loop.end());
    once.push_back(witness.loop.front());
    ColorSet fullStrongFp = pathFingerprint(once, strongSet, game);

    // Annotate an unrolling with S-fingerprints and cut at the first loop
    // position where the fingerprint is complete.
    size_t stemLen = witness.stem.size();
    std::vector<int> unrolled = witness.stem;
    for (int r = 0; r < 2; r++)
        unrolled.insert(unrolled.end(), witness.loop.begin(), witness.loop.end());

    AnnotatedPrefix prefix;
    ColorSet acc;
    size_t cut = unrolled.size();
    for (size_t i = 0; i < unrolled.size(); i++) {
        if (i > 0) {
            int e = *arena.edgeBetween(unrolled[i - 1], unrolled[i]);
            acc = acc.unionWith(arena.edge(e).colors.intersect(strongSet));
        }
        prefix.nodes.push_back(unrolled[i]);
        prefix.fps.push_back(acc);
        if (i >= stemLen && acc == fullStrongFp) {
            cut = i;
            break;
        }
    }
    if (cut == unrolled.size())
        throw InternalError("extractCertificate: fingerprint never completed");

    removeFingerprintRepeats(prefix);
    if (prefix.fps.back() != fullStrongFp)
        throw InternalError("extractCertificate: repeat removal changed the final fingerprint");
    std::vector<int> stem = prefix.nodes;

    // Infinitely visited subgraph: the witness loop's nodes and edges.
    LoopGraph lg{game, {}, {}};
    for (int v : witness.loop) lg.nodes.insert(v);
    for (size_t i = 0; i + 1 < witness.loop.size(); i++)
        lg.edgeIdx.insert(*arena.edgeBetween(witness.loop[i], witness.loop[i + 1]));
    lg.edgeIdx.insert(*arena.edgeBetween(witness.loop.back(), witness.loop.front()));

    // The loop is the shortest closed walk through the recurring subgraph
    // that starts and ends at the stem end and covers every recurring color.
    // Ending at the stem end makes the first walked edge double as the
    // loop-closing edge, so every walked edge lies on the repeated cycle.
    // The stem end is a loop node of the witness, so it belongs to the
    // subgraph.
    int anchor = stem.back();
    std::vector<int> loop = shortestCoveringWalk(lg, anchor, witnessInf);
    if (loop.empty()) throw InternalError("extractCertificate: no covering cycle");

    Certificate cert{std::move(stem), std::move(loop)};
    validateCertificate(cert, game);

    long n = game.nodeCount(), d = game.d(), k = game.k();
    if ((long)cert.stem.size() > n * (d + 1) ||
        (long)cert.loop.size() > (d + k + 1) * (n + 1))
        throw InternalError("extractCertificate: size bound exceeded");
    if (lassoInfinitySet(Lasso{cert.stem, cert.loop}, game) != witnessInf)
        throw InternalError("extractCertificate: loop infinity set drifted");
    if (!isValidCertificate(cert, game))
        throw InternalError("extractCertificate: produced an invalid certificate");
    return cert;
}

}  // namespace oblige
