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

#include "oracle_explicit.hpp"

#include <algorithm>
#include <set>

#include "parity.hpp"

namespace oblige {

namespace {

struct Enumerator {
    const ObligingGame& game;
    const ExplicitOracleOptions& opts;
    long stemBound, loopBound;
    long count = 0;
    std::vector<std::vector<Certificate>> out;

    void bump()
    {
        if (++count > opts.certificateBudget)
            throw GuardError("explicit oracle: certificate budget exceeded");
    }

    // Loops from the stem end: paths over (node, covered colors) states with
    // no repeats; a candidate closes whenever the wrap edge exists and the
    // covered set plus the wrap colors satisfies both objectives.
    void growLoop(const std::vector<int>& stem, std::vector<int>& loop, ColorSet covered,
                  std::set<std::pair<int, ColorSet>>& seen)
    {
        const Arena& arena = game.arena();
        int cur = loop.empty() ? stem.back() : loop.back();
        if (!loop.empty()) {
            if (auto wrap = arena.edgeBetween(loop.back(), loop.front())) {
                ColorSet total = covered.unionWith(arena.edge(*wrap).colors);
                if (game.strong().eval(total) && game.weak().eval(total)) {
                    bump();
                    out[stem.front()].push_back({stem, loop});
                }
            }
        }
        if ((long)loop.size() >= loopBound) return;
        for (int e : arena.out(cur)) {
            const Edge& edge = arena.edge(e);
            ColorSet nextCovered = loop.empty() ? ColorSet() : covered.unionWith(edge.colors);
            // The junction move from the stem is taken once and contributes
            // nothing to the loop's recurring colors.
            std::pair<int, ColorSet> state{edge.dst, nextCovered};
            if (seen.count(state)) continue;
            seen.insert(state);
            loop.push_back(edge.dst);
            growLoop(stem, loop, nextCovered, seen);
            loop.pop_back();
            seen.erase(state);
        }
    }

    void growStem(std::vector<int>& stem, ColorSet fp, std::set<std::pair<int, ColorSet>>& seen)
    {
        {
            std::vector<int> loop;
            std::set<std::pair<int, ColorSet>> loopSeen;
            growLoop(stem, loop, ColorSet(), loopSeen);
        }
        if ((long)stem.size() >= stemBound) return;
        const Arena& arena = game.arena();
        for (int e : arena.out(stem.back())) {
            const Edge& edge = arena.edge(e);
            ColorSet nextFp = fp.unionWith(edge.colors.intersect(game.strongColors()));
            std::pair<int, ColorSet> state{edge.dst, nextFp};
            if (seen.count(state)) continue;
            seen.insert(state);
            stem.push_back(edge.dst);
            growStem(stem, nextFp, seen);
            stem.pop_back();
            seen.erase(state);
        }
    }

    void run()
    {
        out.resize(game.nodeCount());
        for (int v = 0; v < game.nodeCount(); v++) {
            std::vector<int> stem = {v};
            std::set<std::pair<int, ColorSet>> seen{{v, ColorSet()}};
            growStem(stem, ColorSet(), seen);
        }
    }
};

}  // namespace

std::vector<std::vector<Certificate>> enumerateCertificates(const ObligingGame& game,
                                                            const ExplicitOracleOptions& opts)
{
    // Default bounds cover every pruned representative: stem states are a
    // fingerprint chain (at most n*(d+1)), loop states a coverage chain.
    Enumerator en{game, opts,
                  opts.stemBound > 0 ? opts.stemBound : (long)game.nodeCount() * (game.d() + 1),
                  opts.loopBound > 0 ? opts.loopBound
                                     : (long)(game.d() + game.k() + 1) * (game.nodeCount() + 1)};
    en.run();
    return en.out;
}

std::vector<char> oracleExplicitCertificateGame(const ObligingGame& game,
                                                const ExplicitOracleOptions& opts)
{
    const Arena& arena = game.arena();
    std::vector<std::vector<Certificate>> certs = enumerateCertificates(game, opts);

    ColorId giveUp = (ColorId)game.colorNames().size();
    ColorId dead = giveUp + 1;
    if (dead >= ColorSet::kMaxColors) throw GuardError("explicit oracle: color universe full");

    // Certificate-game arena: original nodes, one challenger node per
    // certificate, one exit node per (certificate, universal position,
    // successor). Nodes without a certificate fall into a losing sink.
    std::vector<Owner> owners(game.nodeCount());
    for (int v = 0; v < game.nodeCount(); v++) owners[v] = Owner::Exists;
    std::vector<Edge> edges;

    auto addNode = [&](Owner o) {
        owners.push_back(o);
        return (int)owners.size() - 1;
    };

    int sink = addNode(Owner::Forall);
    edges.push_back({sink, sink, ColorSet::single(dead)});

    for (int v = 0; v < game.nodeCount(); v++) {
        if (certs[v].empty()) {
            edges.push_back({v, sink, ColorSet()});
            continue;
        }
        for (const Certificate& cert : certs[v]) {
            int certNode = addNode(Owner::Forall);
            edges.push_back({v, certNode, ColorSet()});
            edges.push_back({certNode, certNode, ColorSet::single(giveUp)});

            // Exits from universal positions, labelled with the strong
            // fingerprint of the certificate walk up to the exit move.
            ColorSet fp;
            int len = cert.length();
            for (int pos = 0; pos < len; pos++) {
                int node = cert.nodeAt(pos);
                if (arena.owner(node) == Owner::Forall) {
                    for (int e : arena.out(node)) {
                        const Edge& exit = arena.edge(e);
                        ColorSet exitFp =
                            fp.unionWith(exit.colors.intersect(game.strongColors()));
                        int exitNode = addNode(Owner::Forall);
                        edges.push_back({certNode, exitNode, exitFp});
                        edges.push_back({exitNode, exit.dst, ColorSet()});
                    }
                }
                auto step = arena.edgeBetween(node, cert.nodeAt(cert.nextPos(pos)));
                fp = fp.unionWith(arena.edge(*step).colors.intersect(game.strongColors()));
            }
        }
        if ((long)owners.size() > opts.maxProductNodes)
            throw GuardError("explicit oracle: certificate game too large");
    }

    Formula objective = Formula::conj(
        Formula::disj(Formula::inf(giveUp), game.strong()), Formula::fin(dead));

    ELGame cg{Arena((int)owners.size(), owners, edges), objective};
    std::vector<ColorId> tracked = game.strongColorList();
    tracked.push_back(giveUp);
    tracked.push_back(dead);

    ParitizeResult par = paritize(cg, tracked);
    if ((long)par.pg.nodeCount() > opts.maxProductNodes)
        throw GuardError("explicit oracle: paritized game too large");
    logLine("explicit oracle: " + std::to_string(owners.size()) + " game nodes, " +
            std::to_string(par.pg.nodeCount()) + " parity nodes");
    ZielonkaResult z = zielonkaSolve(par.pg);

    std::vector<char> region(game.nodeCount(), 0);
    for (int v = 0; v < game.nodeCount(); v++)
        region[v] = z.winner[par.entryNode[v]] == 0;
    return region;
}

}  // namespace oblige
