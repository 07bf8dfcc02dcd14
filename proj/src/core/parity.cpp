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

#include "parity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace oblige {

void ParityGame::validate() const
{
    std::vector<char> hasOut(owners.size(), 0);
    for (const PEdge& e : edges) {
        if (e.src < 0 || e.src >= nodeCount() || e.dst < 0 || e.dst >= nodeCount())
            throw StructuralError("parity game: edge endpoint out of range");
        if (e.priority < 0) throw StructuralError("parity game: negative priority");
        hasOut[e.src] = 1;
    }
    for (int v = 0; v < nodeCount(); v++)
        if (!hasOut[v])
            throw StructuralError("parity game: node " + std::to_string(v) + " has no successor");
}

std::string ParityGame::toText() const
{
    std::ostringstream out;
    out << "parity " << nodeCount() << "\n";
    for (int v = 0; v < nodeCount(); v++) {
        out << v << " " << (owners[v] == Owner::Exists ? 'E' : 'A');
        for (const PEdge& e : edges)
            if (e.src == v) out << " (" << e.dst << "," << e.priority << ")";
        out << "\n";
    }
    return out.str();
}

namespace {

// Node-priority view used internally: original nodes get priority 0 and each
// edge becomes a relay node carrying the edge's priority. Max-priority
// semantics are unchanged because every step traverses a relay.
struct SplitGame {
    int total;
    int baseCount;
    std::vector<int> priority;
    std::vector<Owner> owner;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;
    std::vector<int> relayDst;  // relay node -> base target
};

SplitGame split(const ParityGame& pg)
{
    SplitGame g;
    g.baseCount = pg.nodeCount();
    g.total = g.baseCount + (int)pg.edges.size();
    g.priority.assign(g.total, 0);
    g.owner.resize(g.total);
    g.out.resize(g.total);
    g.in.resize(g.total);
    g.relayDst.assign(g.total, -1);
    for (int v = 0; v < g.baseCount; v++) g.owner[v] = pg.owners[v];
    for (int j = 0; j < (int)pg.edges.size(); j++) {
        const auto& e = pg.edges[j];
        int relay = g.baseCount + j;
        g.priority[relay] = e.priority;
        g.owner[relay] = pg.owners[e.src];
        g.relayDst[relay] = e.dst;
        g.out[e.src].push_back(relay);
        g.in[relay].push_back(e.src);
        g.out[relay].push_back(e.dst);
        g.in[e.dst].push_back(relay);
    }
    return g;
}

class ZielonkaImpl {
  public:
    explicit ZielonkaImpl(const SplitGame& g)
        : g_(g), winner_(g.total, -1), strat_(g.total, -1)
    {
    }

    void run()
    {
        std::vector<char> active(g_.total, 1);
        solve(active);
    }

    std::vector<int> winner_;
    std::vector<int> strat_;

  private:
    const SplitGame& g_;

    // Player pl attractor of target within active; records pl's strategy on
    // newly attracted pl-nodes (and on target pl-nodes lacking one).
    std::vector<char> attract(const std::vector<char>& active, std::vector<char> inSet, int pl,
                              std::vector<int>& strat)
    {
        std::vector<int> count(g_.total, 0);
        for (int v = 0; v < g_.total; v++) {
            if (!active[v]) continue;
            for (int w : g_.out[v])
                if (active[w]) count[v]++;
        }
        std::deque<int> queue;
        for (int v = 0; v < g_.total; v++)
            if (inSet[v]) queue.push_back(v);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g_.in[u]) {
                if (!active[v] || inSet[v]) continue;
                if ((g_.owner[v] == Owner::Exists) == (pl == 0)) {
                    inSet[v] = 1;
                    strat[v] = u;
                    queue.push_back(v);
                } else if (--count[v] == 0) {
                    inSet[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        return inSet;
    }

    void markRegion(const std::vector<char>& region, int pl)
    {
        for (int v = 0; v < g_.total; v++)
            if (region[v]) winner_[v] = pl;
    }

    void solve(std::vector<char> active)
    {
        int maxPrio = -1;
        for (int v = 0; v < g_.total; v++)
            if (active[v]) maxPrio = std::max(maxPrio, g_.priority[v]);
        if (maxPrio < 0) return;

        int pl = maxPrio % 2;  // 0 = exists (even)
        std::vector<char> top(g_.total, 0);
        for (int v = 0; v < g_.total; v++)
            if (active[v] && g_.priority[v] == maxPrio) top[v] = 1;

        std::vector<char> attrA = attract(active, top, pl, strat_);
        std::vector<char> rest = active;
        for (int v = 0; v < g_.total; v++)
            if (attrA[v]) rest[v] = 0;
        solve(rest);

        bool opponentEmpty = true;
        for (int v = 0; v < g_.total; v++)
            if (rest[v] && winner_[v] == 1 - pl) opponentEmpty = false;

        if (opponentEmpty) {
            // pl wins everything: attractor strategy on attrA, any active
            // successor on top pl-nodes, recursive strategy elsewhere.
            for (int v = 0; v < g_.total; v++) {
                if (!active[v]) continue;
                winner_[v] = pl;
                bool mine = (g_.owner[v] == Owner::Exists) == (pl == 0);
                if (mine && top[v]) {
                    for (int w : g_.out[v])
                        if (active[w]) {
                            strat_[v] = w;
                            break;
                        }
                }
            }
            return;
        }

        std::vector<char> opponentWon(g_.total, 0);
        for (int v = 0; v < g_.total; v++)
            if (rest[v] && winner_[v] == 1 - pl) opponentWon[v] = 1;
        std::vector<char> attrB = attract(active, opponentWon, 1 - pl, strat_);
        std::vector<char> rest2 = active;
        for (int v = 0; v < g_.total; v++)
            if (attrB[v]) rest2[v] = 0;
        solve(rest2);
        markRegion(attrB, 1 - pl);
        // winners on rest2 already set by the recursive call
    }
};

}  // namespace

ZielonkaResult zielonkaSolve(const ParityGame& pg)
{
    pg.validate();
    SplitGame g = split(pg);
    ZielonkaImpl impl(g);
    impl.run();

    ZielonkaResult res;
    res.winner.assign(pg.nodeCount(), -1);
    res.strategyExists.assign(pg.nodeCount(), -1);
    res.strategyForall.assign(pg.nodeCount(), -1);
    for (int v = 0; v < pg.nodeCount(); v++) {
        res.winner[v] = impl.winner_[v];
        int relay = impl.strat_[v];
        if (relay >= g.baseCount) {
            int dst = g.relayDst[relay];
            if (pg.owners[v] == Owner::Exists)
                res.strategyExists[v] = dst;
            else
                res.strategyForall[v] = dst;
        }
    }
    return res;
}

ParitizeResult paritize(const ELGame& game)
{
    return paritize(game, game.objective.colors().toList());
}

ParitizeResult paritize(const ELGame& game, const std::vector<ColorId>& initialOrder)
{
    PermutationTable table(initialOrder, game.objective);
    ColorSet tracked = ColorSet::fromList(initialOrder);

    const Arena& arena = game.arena;
    int permCount = table.count();
    int initRank = table.initialRank();

    ParitizeResult res;
    res.permCount = permCount;
    res.entryNode.assign(arena.nodeCount(), -1);

    std::map<std::pair<int, int>, int> ids;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int v, int rank) {
        auto it = ids.find({v, rank});
        if (it != ids.end()) return it->second;
        int id = (int)res.productToBase.size();
        ids[{v, rank}] = id;
        res.productToBase.push_back({v, rank});
        queue.push_back({v, rank});
        return id;
    };
    for (int v = 0; v < arena.nodeCount(); v++) res.entryNode[v] = intern(v, initRank);

    std::vector<Owner> owners;
    std::vector<ParityGame::PEdge> edges;
    while (!queue.empty()) {
        auto [v, rank] = queue.front();
        queue.pop_front();
        int src = ids.at({v, rank});
        (void)src;
        for (int e : arena.out(v)) {
            const Edge& edge = arena.edge(e);
            int pos = table.rightmostPos(rank, edge.colors.intersect(tracked));
            int nextRank = table.shiftByPos(rank, pos);
            int dst = intern(edge.dst, nextRank);
            edges.push_back({ids.at({v, rank}), dst, table.priorityAt(rank, pos)});
        }
    }
    owners.resize(res.productToBase.size());
    for (int id = 0; id < (int)res.productToBase.size(); id++)
        owners[id] = arena.owner(res.productToBase[id].first);

    res.pg.owners = std::move(owners);
    res.pg.edges = std::move(edges);
    res.pg.validate();
    return res;
}

}  // namespace oblige
