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

#include "dag_attractor.hpp"

#include <algorithm>
#include <deque>

namespace oblige {

AttractorArgument AttractorArgument::allOf(const RealNodeSpace& space, int priorities, bool full)
{
    AttractorArgument arg;
    arg.byPriority.assign(priorities, RealNodeSet(space.size(), full ? 1 : 0));
    return arg;
}

bool AttractorArgument::subsetOf(const AttractorArgument& o) const
{
    for (size_t p = 0; p < byPriority.size(); p++)
        for (size_t i = 0; i < byPriority[p].size(); i++)
            if (byPriority[p][i] && !o.byPriority[p][i]) return false;
    return true;
}

SolverContext::SolverContext(const ObligingGame& game, int maxTrackedColors)
    : game_(&game),
      table_((game.d() > maxTrackedColors
                  ? throw GuardError("solver: strong objective uses " + std::to_string(game.d()) +
                                     " colors, limit is " + std::to_string(maxTrackedColors))
                  : game.strongColorList()),
             game.strong()),
      conjunction_(Formula::conj(game.strong(), game.weak())),
      conjClass_(classifyAcceptance(conjunction_))
{
    space_.nodeCount = game.nodeCount();
    space_.permCount = table_.count();
    ColorSet strong = game.strongColors();
    edgePos_.resize(table_.count());
    for (int r = 0; r < table_.count(); r++) {
        edgePos_[r].resize(game.arena().edges().size());
        for (int e = 0; e < (int)game.arena().edges().size(); e++)
            edgePos_[r][e] = table_.rightmostPos(r, game.arena().edge(e).colors.intersect(strong));
    }
    realizable_.assign(priorityCount(), 0);
    for (int r = 0; r < table_.count(); r++)
        for (int p = 0; p <= table_.d(); p++) realizable_[table_.priorityAt(r, p)] = 1;
}

namespace {

// Vertices of the fingerprint graph: (arena node, position 0..d).
struct FingerprintGraph {
    int d;
    int nodeCount;

    int id(int v, int p) const { return v * (d + 1) + p; }
    int size() const { return nodeCount * (d + 1); }
};

}  // namespace

PerPermutationResult dagAttractorForPermutation(const SolverContext& ctx, int rank,
                                                const AttractorArgument& arg, bool wantWitness,
                                                const std::vector<char>* witnessFor)
{
    const ObligingGame& game = ctx.game();
    const Arena& arena = game.arena();
    const PermutationTable& table = ctx.table();
    const RealNodeSpace& space = ctx.space();
    FingerprintGraph fg{table.d(), game.nodeCount()};

    // Remove unsafe vertices: a universal node's vertex dies as soon as one
    // of the owner's exits lands outside the safe set at the exit priority.
    std::vector<char> alive(fg.size(), 1);
    for (int v = 0; v < game.nodeCount(); v++) {
        if (arena.owner(v) != Owner::Forall) continue;
        for (int p = 0; p <= fg.d; p++) {
            bool safe = true;
            for (int e : arena.out(v)) {
                int exitPos = std::max(p, ctx.edgePosition(rank, e));
                int exitRank = table.shiftByPos(rank, exitPos);
                int prio = table.priorityAt(rank, exitPos);
                if (!arg.byPriority[prio][space.id(arena.edge(e).dst, exitRank)]) {
                    safe = false;
                    break;
                }
            }
            if (!safe) alive[fg.id(v, p)] = 0;
        }
    }

    // Per position, the certificate-loop automaton over surviving vertices:
    // transitions keep the position, acceptance is strong-and-weak.
    std::vector<std::vector<char>> nonemptyAt(fg.d + 1);
    std::vector<ELAutomaton> automata(fg.d + 1);
    for (int p = 0; p <= fg.d; p++) {
        ELAutomaton aut;
        aut.colorCount = (int)game.colorNames().size();
        aut.acceptance = ctx.conjunction();
        aut.out.resize(game.nodeCount());
        for (int v = 0; v < game.nodeCount(); v++) {
            if (!alive[fg.id(v, p)]) continue;
            for (int e : arena.out(v)) {
                const Edge& edge = arena.edge(e);
                if (ctx.edgePosition(rank, e) > p) continue;
                if (!alive[fg.id(edge.dst, p)]) continue;
                aut.out[v].push_back({edge.dst, edge.colors});
            }
        }
        nonemptyAt[p] = nonemptyStatesWithClass(aut, ctx.conjunctionClass());
        for (int v = 0; v < game.nodeCount(); v++)
            if (!alive[fg.id(v, p)]) nonemptyAt[p][v] = 0;
        automata[p] = std::move(aut);
    }

    // Safe stems: reachability in the pruned fingerprint graph from (v,0)
    // to any vertex whose layer automaton is nonempty there.
    std::vector<char> good(fg.size(), 0);
    for (int p = 0; p <= fg.d; p++)
        for (int v = 0; v < game.nodeCount(); v++)
            if (nonemptyAt[p][v]) good[fg.id(v, p)] = 1;

    std::vector<std::vector<int>> preds(fg.size());
    for (int v = 0; v < game.nodeCount(); v++)
        for (int p = 0; p <= fg.d; p++) {
            if (!alive[fg.id(v, p)]) continue;
            for (int e : arena.out(v)) {
                int q = std::max(p, ctx.edgePosition(rank, e));
                int to = fg.id(arena.edge(e).dst, q);
                if (alive[to]) preds[to].push_back(fg.id(v, p));
            }
        }
    std::vector<char> reachesGood = good;
    std::deque<int> queue;
    for (int m = 0; m < fg.size(); m++)
        if (good[m] && alive[m]) queue.push_back(m);
    while (!queue.empty()) {
        int m = queue.front();
        queue.pop_front();
        for (int pre : preds[m])
            if (!reachesGood[pre]) {
                reachesGood[pre] = 1;
                queue.push_back(pre);
            }
    }

    PerPermutationResult res;
    res.nodes.assign(game.nodeCount(), 0);
    res.witness.resize(game.nodeCount());
    for (int v = 0; v < game.nodeCount(); v++)
        res.nodes[v] = alive[fg.id(v, 0)] && reachesGood[fg.id(v, 0)];

    if (!wantWitness) return res;

    // Witness assembly: forward BFS through the pruned graph to the nearest
    // good vertex, then a certificate loop from the layer automaton.
    for (int v = 0; v < game.nodeCount(); v++) {
        if (!res.nodes[v]) continue;
        if (witnessFor && !(*witnessFor)[v]) continue;
        std::vector<int> parent(fg.size(), -2);
        std::vector<int> frontier = {fg.id(v, 0)};
        parent[fg.id(v, 0)] = -1;
        int found = -1;
        while (!frontier.empty() && found < 0) {
            std::sort(frontier.begin(), frontier.end());
            for (int m : frontier)
                if (good[m]) {
                    found = m;
                    break;
                }
            if (found >= 0) break;
            std::vector<int> next;
            for (int m : frontier) {
                int node = m / (fg.d + 1), p = m % (fg.d + 1);
                for (int e : arena.out(node)) {
                    int q = std::max(p, ctx.edgePosition(rank, e));
                    int to = fg.id(arena.edge(e).dst, q);
                    if (alive[to] && parent[to] == -2) {
                        parent[to] = m;
                        next.push_back(to);
                    }
                }
            }
            frontier = std::move(next);
        }
        if (found < 0) throw InternalError("dag attractor: winner lost its witness path");

        std::vector<int> stemNodes;
        for (int m = found; m != -1; m = parent[m]) stemNodes.push_back(m / (fg.d + 1));
        std::reverse(stemNodes.begin(), stemNodes.end());
        int layer = found % (fg.d + 1);
        int entryState = found / (fg.d + 1);

        AcceptingLasso lasso =
            witnessLassoWithClass(automata[layer], ctx.conjunctionClass(), entryState);
        Lasso witness;
        witness.stem.assign(stemNodes.begin(), stemNodes.end() - 1);
        witness.stem.insert(witness.stem.end(), lasso.stem.begin(), lasso.stem.end());
        witness.loop = lasso.loop;
        res.witness[v] = std::move(witness);
    }
    return res;
}

DagAttractorResult dagAttractor(const SolverContext& ctx, const AttractorArgument& arg,
                                bool wantCertificates, const RealNodeSet* certificateFor)
{
    const RealNodeSpace& space = ctx.space();
    DagAttractorResult res;
    res.attracted.assign(space.size(), 0);
    res.certificates.resize(wantCertificates ? space.size() : 0);
    for (int rank = 0; rank < space.permCount; rank++) {
        std::vector<char> mask;
        if (wantCertificates && certificateFor) {
            mask.resize(space.nodeCount);
            for (int v = 0; v < space.nodeCount; v++)
                mask[v] = (*certificateFor)[space.id(v, rank)];
        }
        PerPermutationResult per = dagAttractorForPermutation(
            ctx, rank, arg, wantCertificates, mask.empty() ? nullptr : &mask);
        for (int v = 0; v < space.nodeCount; v++) {
            if (!per.nodes[v]) continue;
            res.attracted[space.id(v, rank)] = 1;
            if (wantCertificates && per.witness[v])
                res.certificates[space.id(v, rank)] = extractCertificate(*per.witness[v], ctx.game());
        }
    }
    return res;
}

}  // namespace oblige
