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

#include "oracle_prior.hpp"

#include <deque>
#include <map>

#include "parity.hpp"

namespace oblige {

namespace {

// Models of the weak objective over its own colors, in ascending mask order.
std::vector<ColorSet> weakModels(const ObligingGame& game, const PriorOracleOptions& opts)
{
    if (game.k() > opts.maxWeakColors)
        throw GuardError("prior oracle: weak objective uses too many colors");
    std::vector<ColorId> palette = game.weakColors().toList();
    std::vector<ColorSet> models;
    for (uint32_t m = 0; m < (1u << palette.size()); m++) {
        ColorSet candidate;
        for (size_t i = 0; i < palette.size(); i++)
            if ((m >> i) & 1) candidate.add(palette[i]);
        if (game.weak().eval(candidate)) models.push_back(candidate);
    }
    return models;
}

// Promise states: waiting, or (model, pointer). The pointer walks the
// model's colors in id order; completing a round pays the Buchi color.
struct PromiseSpace {
    std::vector<ColorSet> models;
    std::vector<std::vector<ColorId>> modelColors;
    std::vector<int> base;  // state id of (model, 0)
    int stateCount = 1;     // waiting = 0

    explicit PromiseSpace(std::vector<ColorSet> ms) : models(std::move(ms))
    {
        for (const ColorSet& m : models) {
            base.push_back(stateCount);
            modelColors.push_back(m.toList());
            stateCount += std::max(1, m.count());
        }
    }

    int waiting() const { return 0; }
    int state(int model, int ptr) const { return base[model] + ptr; }

    // Advance the pointer past the colors the move delivers; reports whether
    // a full round completed. The empty model wraps on every compatible move.
    std::pair<int, bool> advance(int model, int ptr, ColorSet seen) const
    {
        const auto& colors = modelColors[model];
        if (colors.empty()) return {0, true};
        bool wrapped = false;
        for (size_t steps = 0; steps < colors.size(); steps++) {
            if (!seen.has(colors[ptr])) break;
            ptr = (ptr + 1) % (int)colors.size();
            if (ptr == 0) {
                wrapped = true;
                break;
            }
        }
        return {ptr, wrapped};
    }
};

}  // namespace

int priorWeakAutomatonStates(const ObligingGame& game, const PriorOracleOptions& opts)
{
    return PromiseSpace(weakModels(game, opts)).stateCount;
}

std::vector<char> oraclePriorReduction(const ObligingGame& game, const PriorOracleOptions& opts)
{
    const Arena& arena = game.arena();
    PromiseSpace promise(weakModels(game, opts));
    ColorSet weakSet = game.weakColors();
    ColorId fresh = (ColorId)game.colorNames().size();
    if (fresh >= ColorSet::kMaxColors) throw GuardError("prior oracle: color universe full");

    // Product nodes:
    //   move phase (v, announced target t, promise q)  owner(v)
    //   bookkeeping phase (w, promise q)               owner exists
    //   sink (broken promises)                         absorbing, no Buchi
    // Promise encoding per node: -1 = waiting, else promise state id.
    struct NodeKey {
        int kind;  // 0 = move, 1 = bookkeeping, 2 = sink
        int node, target, q;
        auto operator<=>(const NodeKey&) const = default;
    };

    std::map<NodeKey, int> ids;
    std::deque<NodeKey> queue;
    std::vector<Owner> owners;
    std::vector<Edge> edges;
    auto intern = [&](NodeKey key, Owner owner) {
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = (int)owners.size();
        ids[key] = id;
        owners.push_back(owner);
        queue.push_back(key);
        if ((long)owners.size() > opts.maxProductNodes)
            throw GuardError("prior oracle: product too large");
        return id;
    };

    int sink = intern({2, 0, 0, 0}, Owner::Forall);
    edges.push_back({sink, sink, ColorSet()});

    std::vector<int> entry(game.nodeCount());
    for (int v = 0; v < game.nodeCount(); v++)
        entry[v] = intern({1, v, 0, -1}, Owner::Exists);

    auto movePhase = [&](int v, int t, int q) {
        return intern({0, v, t, q}, arena.owner(v));
    };

    while (!queue.empty()) {
        NodeKey key = queue.front();
        queue.pop_front();
        int self = ids.at(key);
        if (key.kind == 2) continue;

        if (key.kind == 1) {
            // Bookkeeping: announce the next move; from waiting, optionally
            // commit to a satisfying color set.
            int w = key.node;
            for (int e : arena.out(w)) {
                int t = arena.edge(e).dst;
                edges.push_back({self, movePhase(w, t, key.q), ColorSet()});
                if (key.q == -1)
                    for (int m = 0; m < (int)promise.models.size(); m++)
                        edges.push_back({self, movePhase(w, t, promise.state(m, 0)), ColorSet()});
            }
            continue;
        }

        // Move phase.
        int v = key.node, t = key.target, q = key.q;
        for (int e : arena.out(v)) {
            const Edge& edge = arena.edge(e);
            int w = edge.dst;
            ColorSet colors = edge.colors;
            bool followed = (w == t);
            int nextQ = q;
            bool buchi = false;
            bool toSink = false;

            if (!followed) {
                if (arena.owner(v) == Owner::Forall) {
                    buchi = true;  // challenge: excused deviation
                    nextQ = -1;
                } else {
                    // The system broke its own announcement.
                    if (q == -1)
                        nextQ = -1;
                    else
                        toSink = true;
                }
            } else if (q != -1) {
                int model = -1;
                for (int m = 0; m < (int)promise.models.size(); m++)
                    if (q >= promise.base[m] &&
                        (m + 1 == (int)promise.models.size() || q < promise.base[m + 1]))
                        model = m;
                ColorSet weakPart = colors.intersect(weakSet);
                if (!weakPart.subsetOf(promise.models[model])) {
                    toSink = true;  // promised colors violated by the promised path
                } else {
                    auto [ptr, wrapped] = promise.advance(model, q - promise.base[model], colors);
                    nextQ = promise.state(model, ptr);
                    buchi = wrapped;
                }
            }

            if (buchi) colors.add(fresh);
            int dst = toSink ? sink : intern({1, w, 0, nextQ}, Owner::Exists);
            edges.push_back({self, dst, colors});
        }
    }

    ELGame product{Arena((int)owners.size(), owners, edges), Formula::conj(game.strong(), Formula::inf(fresh))};

    std::vector<ColorId> tracked = game.strongColorList();
    tracked.push_back(fresh);
    ParitizeResult par = paritize(product, tracked);
    logLine("prior oracle: " + std::to_string(owners.size()) + " product nodes, " +
            std::to_string(par.pg.nodeCount()) + " parity nodes");
    ZielonkaResult z = zielonkaSolve(par.pg);

    std::vector<char> region(game.nodeCount(), 0);
    for (int v = 0; v < game.nodeCount(); v++)
        region[v] = z.winner[par.entryNode[entry[v]]] == 0;
    return region;
}

}  // namespace oblige
