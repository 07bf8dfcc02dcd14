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

#include "strategy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "el_automaton.hpp"

namespace oblige {

namespace {

struct MemoryKey {
    int anchor, rank, pos;
    auto operator<=>(const MemoryKey&) const = default;
};

std::string permLabel(const ObligingGame& game, const PermutationTable& table, int rank)
{
    std::string s;
    for (ColorId c : table.perm(rank)) s += game.colorNames()[c];
    return s.empty() ? "-" : s;
}

}  // namespace

std::pair<MealyStrategy, ExtractionInfo> extractStrategy(const ObligingGame& game,
                                                         const SolveResult& solved)
{
    SolverContext ctx(game, std::max(4, game.d()));
    const PermutationTable& table = ctx.table();
    const Arena& arena = game.arena();

    // Prefix strong-fingerprints per certificate, plus the loop-entry
    // saturation check the memory construction relies on: within the loop
    // the fingerprint must already be complete, so flat positions describe
    // the walked fingerprint regardless of wraps.
    struct CertInfo {
        const Certificate* cert;
        std::vector<ColorSet> prefixFp;  // fingerprint of flat positions 0..i
        std::vector<int> occurrence;     // occurrence index of nodeAt(i), 1-based
    };
    std::map<std::pair<int, int>, CertInfo> info;
    for (const auto& [key, cert] : solved.certificates) {
        CertInfo ci;
        ci.cert = &cert;
        int len = cert.length();
        ci.prefixFp.resize(len);
        ci.occurrence.resize(len);
        ColorSet fp;
        std::map<int, int> counts;
        for (int i = 0; i < len; i++) {
            if (i > 0) {
                int e = *arena.edgeBetween(cert.nodeAt(i - 1), cert.nodeAt(i));
                fp = fp.unionWith(arena.edge(e).colors.intersect(game.strongColors()));
            }
            ci.prefixFp[i] = fp;
            ci.occurrence[i] = ++counts[cert.nodeAt(i)];
        }
        ColorSet loopStrong;
        for (size_t i = 0; i + 1 < cert.loop.size(); i++) {
            int e = *arena.edgeBetween(cert.loop[i], cert.loop[i + 1]);
            loopStrong = loopStrong.unionWith(arena.edge(e).colors.intersect(game.strongColors()));
        }
        int wrap = *arena.edgeBetween(cert.loop.back(), cert.loop.front());
        loopStrong = loopStrong.unionWith(arena.edge(wrap).colors.intersect(game.strongColors()));
        if (!loopStrong.subsetOf(ci.prefixFp[(int)cert.stem.size()]))
            throw InternalError("extractStrategy: certificate stem fingerprint not saturated");
        info.emplace(key, std::move(ci));
    }

    MealyStrategy s;
    std::map<MemoryKey, int> memIds;
    std::deque<MemoryKey> queue;
    auto intern = [&](MemoryKey key) {
        auto it = memIds.find(key);
        if (it != memIds.end()) return it->second;
        if (!info.count({key.anchor, key.rank}))
            throw InternalError("extractStrategy: missing certificate for a reachable memory");
        int id = (int)memIds.size();
        memIds[key] = id;
        s.memoryLabels.push_back("(" + game.nodeName(key.anchor) + "," +
                                 permLabel(game, table, key.rank) + "," +
                                 std::to_string(key.pos) + ")");
        queue.push_back(key);
        return id;
    };

    // Exit-structure check: deviations jump between recorded certificates;
    // if the challenger could cycle deviations with an odd maximal exit
    // priority, the strong objective would be breakable. The recording
    // stages of the solver are meant to rule this out; verify it.
    {
        struct ExitEdge {
            int src, dst, priority;
        };
        std::vector<ExitEdge> exits;
        for (const auto& [key, cert] : solved.certificates) {
            auto [anchor, rank] = key;
            int src = ctx.space().id(anchor, rank);
            int pos = 0;
            ColorSet fp;
            for (int step = 0; step < cert.length(); step++) {
                int node = cert.nodeAt(step);
                if (arena.owner(node) == Owner::Forall) {
                    for (int e : arena.out(node)) {
                        ColorSet walked =
                            fp.unionWith(arena.edge(e).colors.intersect(game.strongColors()));
                        int p = table.rightmostPos(rank, walked);
                        exits.push_back({src, ctx.space().id(arena.edge(e).dst,
                                                             table.shiftByPos(rank, p)),
                                         table.priorityAt(rank, p)});
                    }
                }
                auto edge = arena.edgeBetween(node, cert.nodeAt(cert.nextPos(step)));
                fp = fp.unionWith(arena.edge(*edge).colors.intersect(game.strongColors()));
                pos = step;
            }
            (void)pos;
        }
        int maxPrio = 0;
        for (const auto& e : exits) maxPrio = std::max(maxPrio, e.priority);
        for (int p = 1; p <= maxPrio; p += 2) {
            // A strongly connected exit set joining both ends of a
            // priority-p exit under only priorities <= p is a losing cycle.
            std::map<int, std::vector<int>> adj;
            for (const auto& e : exits)
                if (e.priority <= p) adj[e.src].push_back(e.dst);
            for (const auto& e : exits) {
                if (e.priority != p) continue;
                // Path from dst back to src over priorities <= p?
                std::deque<int> queue{e.dst};
                std::set<int> seen{e.dst};
                bool back = false;
                while (!queue.empty() && !back) {
                    int x = queue.front();
                    queue.pop_front();
                    if (x == e.src) back = true;
                    for (int y : adj[x])
                        if (seen.insert(y).second) queue.push_back(y);
                }
                if (back)
                    throw InternalError(
                        "extractStrategy: recorded certificates admit an odd exit cycle");
            }
        }
    }

    for (int v = 0; v < game.nodeCount(); v++)
        if (solved.winningRegion[v])
            s.initialMemory[v] = intern({v, solved.initialRank, 0});

    while (!queue.empty()) {
        MemoryKey key = queue.front();
        queue.pop_front();
        int self = memIds.at(key);
        const CertInfo& ci = info.at({key.anchor, key.rank});
        const Certificate& cert = *ci.cert;
        int here = cert.nodeAt(key.pos);
        int nextPos = cert.nextPos(key.pos);
        int planned = cert.nodeAt(nextPos);

        if (arena.owner(here) == Owner::Exists) {
            s.move[{self, here}] = planned;
            s.update[{self, here, planned}] = intern({key.anchor, key.rank, nextPos});
            continue;
        }
        for (int e : arena.out(here)) {
            int w = arena.edge(e).dst;
            if (w == planned) {
                s.update[{self, here, w}] = intern({key.anchor, key.rank, nextPos});
            } else {
                ColorSet walked = ci.prefixFp[key.pos].unionWith(
                    arena.edge(e).colors.intersect(game.strongColors()));
                int newRank = table.shiftByPos(key.rank, table.rightmostPos(key.rank, walked));
                s.update[{self, here, w}] = intern({w, newRank, 0});
            }
        }
    }
    s.memoryCount = (int)memIds.size();

    ExtractionInfo infoOut;
    infoOut.reachableMemoryCount = s.memoryCount;
    std::set<std::tuple<int, int, int>> compressed;
    for (const auto& [key, id] : memIds) {
        const CertInfo& ci = info.at({key.anchor, key.rank});
        compressed.insert({key.anchor, key.rank, ci.occurrence[key.pos]});
    }
    infoOut.compressedMemoryCount = (long)compressed.size();
    return {std::move(s), infoOut};
}

namespace {

// Product of arena and memory, moves restricted by the strategy.
struct Product {
    std::vector<std::pair<int, int>> states;  // (node, memory)
    std::map<std::pair<int, int>, int> ids;
    ELAutomaton aut;  // transitions mirror the product edges
    std::vector<int> initials;
};

Product buildProduct(const ObligingGame& game, const MealyStrategy& s)
{
    const Arena& arena = game.arena();
    Product p;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int node, int mem) {
        auto it = p.ids.find({node, mem});
        if (it != p.ids.end()) return it->second;
        int id = (int)p.states.size();
        p.ids[{node, mem}] = id;
        p.states.push_back({node, mem});
        queue.push_back({node, mem});
        return id;
    };
    for (const auto& [node, mem] : s.initialMemory) p.initials.push_back(intern(node, mem));

    std::vector<std::vector<ELAutomaton::Transition>> out;
    while (!queue.empty()) {
        auto [node, mem] = queue.front();
        queue.pop_front();
        int self = p.ids.at({node, mem});
        if ((int)out.size() <= self) out.resize(self + 1);

        auto push = [&](int w) {
            auto upd = s.update.find({mem, node, w});
            if (upd == s.update.end())
                throw StructuralError("strategy: missing update for memory " +
                                      std::to_string(mem) + " on edge " + game.nodeName(node) +
                                      " -> " + game.nodeName(w));
            int dst = intern(w, upd->second);
            ColorSet colors = arena.edge(*arena.edgeBetween(node, w)).colors;
            out[self].push_back({dst, colors});
        };

        if (arena.owner(node) == Owner::Exists) {
            auto mv = s.move.find({mem, node});
            if (mv == s.move.end())
                throw StructuralError("strategy: no move for memory " + std::to_string(mem) +
                                      " at node " + game.nodeName(node));
            if (!arena.edgeBetween(node, mv->second))
                throw StructuralError("strategy: move uses a missing edge at " +
                                      game.nodeName(node));
            push(mv->second);
        } else {
            for (int e : arena.out(node)) push(arena.edge(e).dst);
        }
    }
    out.resize(p.states.size());
    p.aut.out = std::move(out);
    p.aut.colorCount = (int)game.colorNames().size();
    return p;
}

}  // namespace

VerificationReport verifyStrategy(const ObligingGame& game, const MealyStrategy& strategy)
{
    VerificationReport report;
    Product p = buildProduct(game, strategy);
    report.productStateCount = (long)p.states.size();
    std::set<int> memories;
    for (const auto& [node, mem] : p.states) memories.insert(mem);
    report.reachableMemoryCount = (long)memories.size();

    // Strong: no play compatible with the strategy may satisfy the negated
    // strong objective.
    p.aut.acceptance = game.strong().negated();
    std::vector<char> badRegion = nonemptyStates(p.aut);
    report.strongOk = true;
    for (int init : p.initials) {
        if (badRegion[init]) {
            report.strongOk = false;
            AcceptingLasso bad = witnessLasso(p.aut, init);
            Lasso arenaLasso;
            for (int s : bad.stem) arenaLasso.stem.push_back(p.states[s].first);
            for (int s : bad.loop) arenaLasso.loop.push_back(p.states[s].first);
            report.counterexample = std::move(arenaLasso);
            break;
        }
    }

    // Gracious: every reachable product state keeps a weak-accepting
    // continuation available.
    p.aut.acceptance = game.weak();
    std::vector<char> weakRegion = nonemptyStates(p.aut);
    report.graciousOk = true;
    for (int id = 0; id < (int)p.states.size(); id++) {
        if (!weakRegion[id]) {
            report.graciousOk = false;
            report.stuckState = game.nodeName(p.states[id].first) + " with memory " +
                                std::to_string(p.states[id].second);
            break;
        }
    }
    return report;
}

std::string serializeStrategy(const MealyStrategy& s, const ObligingGame& game)
{
    std::ostringstream out;
    out << "oblige-strategy 1\n";
    out << "memories: " << s.memoryCount << "\n";
    for (int m = 0; m < s.memoryCount; m++)
        out << "mem " << m << " "
            << (m < (int)s.memoryLabels.size() && !s.memoryLabels[m].empty() ? s.memoryLabels[m]
                                                                             : "m" + std::to_string(m))
            << "\n";
    for (const auto& [node, mem] : s.initialMemory)
        out << "init " << game.nodeName(node) << " " << mem << "\n";
    for (const auto& [key, target] : s.move)
        out << "move " << key.first << " " << game.nodeName(key.second) << " "
            << game.nodeName(target) << "\n";
    for (const auto& [key, mem] : s.update)
        out << "update " << std::get<0>(key) << " " << game.nodeName(std::get<1>(key)) << " "
            << game.nodeName(std::get<2>(key)) << " " << mem << "\n";
    return out.str();
}

MealyStrategy parseStrategy(const std::string& text, const ObligingGame& game)
{
    MealyStrategy s;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    bool haveHeader = false;

    auto node = [&](const std::string& name) {
        auto v = game.nodeByName(name);
        if (!v) throw ParseError(lineNo, "unknown node '" + name + "'");
        return *v;
    };
    auto memId = [&](const std::string& tok) {
        int m = std::stoi(tok);
        if (m < 0 || m >= s.memoryCount) throw ParseError(lineNo, "memory id out of range");
        return m;
    };

    while (std::getline(in, line)) {
        lineNo++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "oblige-strategy") {
            std::string version;
            ls >> version;
            if (version != "1") throw ParseError(lineNo, "unsupported strategy version");
            haveHeader = true;
        } else if (tok == "memories:") {
            ls >> s.memoryCount;
            s.memoryLabels.assign(s.memoryCount, "");
        } else if (tok == "mem") {
            std::string id, label;
            ls >> id >> label;
            s.memoryLabels[memId(id)] = label;
        } else if (tok == "init") {
            std::string n, m;
            ls >> n >> m;
            s.initialMemory[node(n)] = memId(m);
        } else if (tok == "move") {
            std::string m, n, t;
            ls >> m >> n >> t;
            s.move[{memId(m), node(n)}] = node(t);
        } else if (tok == "update") {
            std::string m, a, b, m2;
            ls >> m >> a >> b >> m2;
            s.update[{memId(m), node(a), node(b)}] = memId(m2);
        } else {
            throw ParseError(lineNo, "unknown directive '" + tok + "'");
        }
    }
    if (!haveHeader) throw ParseError(0, "missing 'oblige-strategy 1' header");
    return s;
}

}  // namespace oblige
