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

#include "el_automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace oblige {

namespace {

// Flattened transitions with alive masks, so the recursive restrictions of
// the Streett/generic algorithms stay cheap.
struct FlatGraph {
    std::vector<int> src, dst;
    std::vector<ColorSet> colors;
    std::vector<std::vector<int>> outOf;  // state -> transition ids
    int stateCount;

    explicit FlatGraph(const ELAutomaton& aut) : stateCount(aut.stateCount())
    {
        outOf.resize(stateCount);
        for (int s = 0; s < stateCount; s++)
            for (const auto& t : aut.out[s]) {
                outOf[s].push_back((int)src.size());
                src.push_back(s);
                dst.push_back(t.dst);
                colors.push_back(t.colors);
            }
    }
};

struct Scc {
    std::vector<int> states;
    ColorSet colors;
    bool cyclic = false;  // has an internal transition
};

// Tarjan over alive states/transitions, iterative.
std::vector<Scc> sccDecompose(const FlatGraph& g, const std::vector<char>& stateAlive,
                              const std::vector<char>& transAlive)
{
    int n = g.stateCount;
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> onStack(n, 0);
    std::vector<int> stack;
    int next = 0, compCount = 0;

    struct Frame {
        int v;
        size_t edgePos;
    };
    for (int root = 0; root < n; root++) {
        if (!stateAlive[root] || index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(root);
        onStack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edgePos < g.outOf[f.v].size()) {
                int t = g.outOf[f.v][f.edgePos++];
                if (!transAlive[t]) continue;
                int w = g.dst[t];
                if (!stateAlive[w]) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    onStack[w] = 1;
                    frames.push_back({w, 0});
                } else if (onStack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        onStack[w] = 0;
                        comp[w] = compCount;
                    } while (w != f.v);
                    compCount++;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    std::vector<Scc> sccs(compCount);
    for (int s = 0; s < n; s++)
        if (stateAlive[s] && comp[s] >= 0) sccs[comp[s]].states.push_back(s);
    for (int t = 0; t < (int)g.src.size(); t++) {
        if (!transAlive[t] || !stateAlive[g.src[t]] || !stateAlive[g.dst[t]]) continue;
        if (comp[g.src[t]] == comp[g.dst[t]]) {
            sccs[comp[g.src[t]]].cyclic = true;
            sccs[comp[g.src[t]]].colors = sccs[comp[g.src[t]]].colors.unionWith(g.colors[t]);
        }
    }
    for (auto& scc : sccs) std::sort(scc.states.begin(), scc.states.end());
    return sccs;
}

bool transitionHits(const ColorCondition& cond, ColorSet colors)
{
    switch (cond.kind) {
        case ColorCondition::Kind::Always: return true;
        case ColorCondition::Kind::Never: return false;
        case ColorCondition::Kind::Set: return cond.set.intersects(colors);
    }
    return false;
}

void collectGenBuchi(const FlatGraph& g, ColorSet required, std::vector<GoodComponent>& out)
{
    std::vector<char> stateAlive(g.stateCount, 1), transAlive(g.src.size(), 1);
    for (const Scc& scc : sccDecompose(g, stateAlive, transAlive))
        if (scc.cyclic && required.subsetOf(scc.colors)) out.push_back({scc.states, scc.colors});
}

// Recursive SCC restriction: an SCC violating a pair loses the transitions
// firing that pair's left side.
void collectStreett(const FlatGraph& g, const std::vector<SRPair>& pairs,
                    std::vector<char> stateAlive, std::vector<char> transAlive,
                    std::vector<GoodComponent>& out)
{
    for (const Scc& scc : sccDecompose(g, stateAlive, transAlive)) {
        if (!scc.cyclic) continue;
        std::vector<int> violated;
        for (int i = 0; i < (int)pairs.size(); i++)
            if (pairs[i].left.meets(scc.colors) && !pairs[i].right.meets(scc.colors))
                violated.push_back(i);
        if (violated.empty()) {
            out.push_back({scc.states, scc.colors});
            continue;
        }
        std::vector<char> subState(g.stateCount, 0), subTrans(g.src.size(), 0);
        for (int s : scc.states) subState[s] = 1;
        bool removedAny = false;
        for (int s : scc.states)
            for (int t : g.outOf[s]) {
                if (!transAlive[t] || !subState[g.dst[t]]) continue;
                bool fires = false;
                for (int i : violated)
                    if (transitionHits(pairs[i].left, g.colors[t])) fires = true;
                subTrans[t] = fires ? 0 : 1;
                if (fires) removedAny = true;
            }
        // An Always-left violated pair kills the whole component.
        if (!removedAny) continue;
        collectStreett(g, pairs, std::move(subState), std::move(subTrans), out);
    }
}

void collectRabin(const FlatGraph& g, const std::vector<SRPair>& pairs,
                  std::vector<GoodComponent>& out)
{
    for (const SRPair& pair : pairs) {
        if (pair.left.kind == ColorCondition::Kind::Always) continue;  // unavoidable
        std::vector<char> stateAlive(g.stateCount, 1), transAlive(g.src.size(), 0);
        for (int t = 0; t < (int)g.src.size(); t++)
            transAlive[t] = transitionHits(pair.left, g.colors[t]) ? 0 : 1;
        for (const Scc& scc : sccDecompose(g, stateAlive, transAlive)) {
            if (!scc.cyclic) continue;
            if (pair.right.meets(scc.colors) || pair.right.kind == ColorCondition::Kind::Always)
                out.push_back({scc.states, scc.colors});
        }
    }
}

void collectGeneric(const FlatGraph& g, const Formula& phi, std::vector<GoodComponent>& out)
{
    std::vector<char> stateAlive(g.stateCount, 1), transAlive(g.src.size(), 1);
    for (const Scc& scc : sccDecompose(g, stateAlive, transAlive)) {
        if (!scc.cyclic) continue;
        if (scc.colors.count() > 16) throw GuardError("generic emptiness: color budget exceeded");
        std::vector<ColorId> palette = scc.colors.toList();
        uint32_t subsets = 1u << palette.size();
        for (uint32_t m = 0; m < subsets; m++) {
            ColorSet candidate;
            for (size_t i = 0; i < palette.size(); i++)
                if ((m >> i) & 1) candidate.add(palette[i]);
            if (!phi.eval(candidate)) continue;
            std::vector<char> subState(g.stateCount, 0), subTrans(g.src.size(), 0);
            for (int s : scc.states) subState[s] = 1;
            for (int s : scc.states)
                for (int t : g.outOf[s])
                    if (subState[g.dst[t]] && g.colors[t].subsetOf(candidate)) subTrans[t] = 1;
            for (const Scc& sub : sccDecompose(g, subState, subTrans))
                if (sub.cyclic && sub.colors == candidate) out.push_back({sub.states, sub.colors});
        }
    }
}

void collectTrue(const FlatGraph& g, std::vector<GoodComponent>& out)
{
    std::vector<char> stateAlive(g.stateCount, 1), transAlive(g.src.size(), 1);
    for (const Scc& scc : sccDecompose(g, stateAlive, transAlive))
        if (scc.cyclic) out.push_back({scc.states, scc.colors});
}

// Constant folding before structural matching.
Formula simplify(const Formula& f)
{
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::And: {
            Formula a = simplify(f.lhs()), b = simplify(f.rhs());
            if (a.kind() == K::False || b.kind() == K::False) return Formula::f();
            if (a.kind() == K::True) return b;
            if (b.kind() == K::True) return a;
            return Formula::conj(a, b);
        }
        case K::Or: {
            Formula a = simplify(f.lhs()), b = simplify(f.rhs());
            if (a.kind() == K::True || b.kind() == K::True) return Formula::t();
            if (a.kind() == K::False) return b;
            if (b.kind() == K::False) return a;
            return Formula::disj(a, b);
        }
        default: return f;
    }
}

void flatten(const Formula& f, Formula::Kind sep, std::vector<Formula>& out)
{
    if (f.kind() == sep) {
        flatten(f.lhs(), sep, out);
        flatten(f.rhs(), sep, out);
    } else {
        out.push_back(f);
    }
}

// A disjunction of atoms with at most one Fin becomes one Streett pair.
bool asStreettClause(const Formula& clause, SRPair& pair)
{
    std::vector<Formula> atoms;
    flatten(clause, Formula::Kind::Or, atoms);
    ColorSet fins, infs;
    int finCount = 0;
    for (const Formula& a : atoms) {
        if (a.kind() == Formula::Kind::Fin) {
            fins.add(a.color());
            finCount++;
        } else if (a.kind() == Formula::Kind::Inf) {
            infs.add(a.color());
        } else {
            return false;
        }
    }
    if (finCount > 1) return false;
    pair.left = finCount == 1 ? ColorCondition::colors(fins) : ColorCondition::always();
    pair.right = infs.empty() ? ColorCondition::never() : ColorCondition::colors(infs);
    return true;
}

// A conjunction of Fin atoms with at most one Inf becomes one Rabin pair.
bool asRabinClause(const Formula& clause, SRPair& pair)
{
    std::vector<Formula> atoms;
    flatten(clause, Formula::Kind::And, atoms);
    ColorSet fins, infs;
    int infCount = 0;
    for (const Formula& a : atoms) {
        if (a.kind() == Formula::Kind::Fin) {
            fins.add(a.color());
        } else if (a.kind() == Formula::Kind::Inf) {
            infs.add(a.color());
            infCount++;
        } else {
            return false;
        }
    }
    if (infCount > 1) return false;
    pair.left = fins.empty() ? ColorCondition::never() : ColorCondition::colors(fins);
    pair.right = infCount == 1 ? ColorCondition::colors(infs) : ColorCondition::always();
    return true;
}

bool asRabinPairs(const Formula& f, std::vector<SRPair>& pairs)
{
    std::vector<Formula> clauses;
    flatten(f, Formula::Kind::Or, clauses);
    for (const Formula& c : clauses) {
        SRPair pair;
        if (!asRabinClause(c, pair)) return false;
        pairs.push_back(pair);
    }
    return true;
}

}  // namespace

AcceptanceClass classifyAcceptance(const Formula& phi)
{
    AcceptanceClass cls;
    Formula f = simplify(phi);
    if (f.kind() == Formula::Kind::True) {
        cls.kind = AcceptanceClass::Kind::ConstTrue;
        return cls;
    }
    if (f.kind() == Formula::Kind::False) {
        cls.kind = AcceptanceClass::Kind::ConstFalse;
        return cls;
    }

    std::vector<Formula> conjuncts;
    flatten(f, Formula::Kind::And, conjuncts);

    bool allInf = true;
    for (const Formula& c : conjuncts)
        if (c.kind() != Formula::Kind::Inf) allInf = false;
    if (allInf) {
        cls.kind = AcceptanceClass::Kind::GenBuchi;
        for (const Formula& c : conjuncts) cls.genBuchiColors.add(c.color());
        return cls;
    }

    bool allStreett = true;
    std::vector<SRPair> streett;
    for (const Formula& c : conjuncts) {
        SRPair pair;
        if (asStreettClause(c, pair))
            streett.push_back(pair);
        else
            allStreett = false;
    }
    if (allStreett) {
        cls.kind = AcceptanceClass::Kind::Streett;
        cls.streett = std::move(streett);
        return cls;
    }

    std::vector<SRPair> rabin;
    if (asRabinPairs(f, rabin)) {
        cls.kind = AcceptanceClass::Kind::Rabin;
        cls.rabin = std::move(rabin);
        return cls;
    }

    // One Rabin-shaped conjunct among Streett clauses.
    std::vector<SRPair> mixedStreett, mixedRabin;
    int rabinConjuncts = 0;
    bool mixable = true;
    for (const Formula& c : conjuncts) {
        SRPair pair;
        if (asStreettClause(c, pair)) {
            mixedStreett.push_back(pair);
            continue;
        }
        std::vector<SRPair> sub;
        if (asRabinPairs(c, sub)) {
            rabinConjuncts++;
            mixedRabin = std::move(sub);
        } else {
            mixable = false;
        }
    }
    if (mixable && rabinConjuncts == 1) {
        cls.kind = AcceptanceClass::Kind::RabinAndStreett;
        cls.streett = std::move(mixedStreett);
        cls.rabin = std::move(mixedRabin);
        return cls;
    }

    cls.kind = AcceptanceClass::Kind::Generic;
    return cls;
}

std::vector<GoodComponent> goodComponents(const ELAutomaton& aut, const AcceptanceClass& cls)
{
    FlatGraph g(aut);
    std::vector<GoodComponent> out;
    switch (cls.kind) {
        case AcceptanceClass::Kind::ConstTrue: collectTrue(g, out); break;
        case AcceptanceClass::Kind::ConstFalse: break;
        case AcceptanceClass::Kind::GenBuchi: collectGenBuchi(g, cls.genBuchiColors, out); break;
        case AcceptanceClass::Kind::Streett: {
            std::vector<char> stateAlive(g.stateCount, 1), transAlive(g.src.size(), 1);
            collectStreett(g, cls.streett, stateAlive, transAlive, out);
            break;
        }
        case AcceptanceClass::Kind::Rabin: collectRabin(g, cls.rabin, out); break;
        case AcceptanceClass::Kind::RabinAndStreett: {
            for (const SRPair& rp : cls.rabin) {
                std::vector<SRPair> pairs = cls.streett;
                pairs.push_back({ColorCondition::always(), rp.right});
                pairs.push_back({rp.left, ColorCondition::never()});
                std::vector<char> stateAlive(g.stateCount, 1), transAlive(g.src.size(), 1);
                collectStreett(g, pairs, stateAlive, transAlive, out);
            }
            break;
        }
        case AcceptanceClass::Kind::Generic: collectGeneric(g, aut.acceptance, out); break;
    }
    return out;
}

namespace {

std::vector<char> backwardClosure(const ELAutomaton& aut, const std::vector<GoodComponent>& comps)
{
    std::vector<char> reach(aut.stateCount(), 0);
    std::vector<std::vector<int>> preds(aut.stateCount());
    for (int s = 0; s < aut.stateCount(); s++)
        for (const auto& t : aut.out[s]) preds[t.dst].push_back(s);
    std::deque<int> queue;
    for (const GoodComponent& c : comps)
        for (int s : c.states)
            if (!reach[s]) {
                reach[s] = 1;
                queue.push_back(s);
            }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int p : preds[s])
            if (!reach[p]) {
                reach[p] = 1;
                queue.push_back(p);
            }
    }
    return reach;
}

bool anyNonempty(const ELAutomaton& aut, const std::vector<char>& region)
{
    if (aut.initial >= 0) return region[aut.initial];
    for (char c : region)
        if (c) return true;
    return false;
}

}  // namespace

std::vector<char> nonemptyStatesWithClass(const ELAutomaton& aut, const AcceptanceClass& cls)
{
    return backwardClosure(aut, goodComponents(aut, cls));
}

std::vector<char> nonemptyStates(const ELAutomaton& aut)
{
    return nonemptyStatesWithClass(aut, classifyAcceptance(aut.acceptance));
}

std::vector<char> nonemptyStatesGeneric(const ELAutomaton& aut)
{
    AcceptanceClass cls;
    cls.kind = AcceptanceClass::Kind::Generic;
    return nonemptyStatesWithClass(aut, cls);
}

// The boolean front ends convert the acceptance formula to their class
// directly, so formulas expressible in several classes (one Rabin pair, a
// plain Buchi atom) pass through any fitting checker.

bool isEmptyGenBuchi(const ELAutomaton& aut)
{
    AcceptanceClass cls = classifyAcceptance(aut.acceptance);
    if (cls.kind != AcceptanceClass::Kind::GenBuchi &&
        cls.kind != AcceptanceClass::Kind::ConstTrue)
        throw Error("isEmptyGenBuchi: acceptance class mismatch");
    return !anyNonempty(aut, nonemptyStatesWithClass(aut, cls));
}

bool isEmptyRabin(const ELAutomaton& aut)
{
    AcceptanceClass cls;
    cls.kind = AcceptanceClass::Kind::Rabin;
    std::vector<Formula> clauses;
    flatten(simplify(aut.acceptance), Formula::Kind::Or, clauses);
    for (const Formula& c : clauses) {
        SRPair pair;
        if (!asRabinClause(c, pair)) throw Error("isEmptyRabin: acceptance class mismatch");
        cls.rabin.push_back(pair);
    }
    return !anyNonempty(aut, nonemptyStatesWithClass(aut, cls));
}

bool isEmptyStreett(const ELAutomaton& aut)
{
    AcceptanceClass cls;
    cls.kind = AcceptanceClass::Kind::Streett;
    std::vector<Formula> clauses;
    flatten(simplify(aut.acceptance), Formula::Kind::And, clauses);
    for (const Formula& c : clauses) {
        SRPair pair;
        if (!asStreettClause(c, pair)) throw Error("isEmptyStreett: acceptance class mismatch");
        cls.streett.push_back(pair);
    }
    return !anyNonempty(aut, nonemptyStatesWithClass(aut, cls));
}

bool isEmptyGeneric(const ELAutomaton& aut)
{
    return !anyNonempty(aut, nonemptyStatesGeneric(aut));
}

std::vector<char> nonemptyStatesRabinAndStreett(const ELAutomaton& aut,
                                                const std::vector<SRPair>& rabinPairs,
                                                const std::vector<SRPair>& streettPairs)
{
    AcceptanceClass cls;
    cls.kind = AcceptanceClass::Kind::RabinAndStreett;
    cls.rabin = rabinPairs;
    cls.streett = streettPairs;
    return nonemptyStatesWithClass(aut, cls);
}

bool isEmptyRabinAndStreett(const ELAutomaton& aut, const std::vector<SRPair>& rabinPairs,
                            const std::vector<SRPair>& streettPairs)
{
    return !anyNonempty(aut, nonemptyStatesRabinAndStreett(aut, rabinPairs, streettPairs));
}

namespace {

// Deterministic BFS path over full transitions; both endpoints included.
std::vector<int> bfsPath(const ELAutomaton& aut, int src, const std::vector<char>& goal)
{
    std::map<int, int> parent;
    std::vector<int> frontier = {src};
    parent[src] = -1;
    auto build = [&](int v) {
        std::vector<int> path;
        for (int x = v; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    };
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        for (int v : frontier)
            if (goal[v]) return build(v);
        std::vector<int> next;
        for (int v : frontier)
            for (const auto& t : aut.out[v])
                if (!parent.count(t.dst)) {
                    parent[t.dst] = v;
                    next.push_back(t.dst);
                }
        frontier = std::move(next);
    }
    return {};
}

// BFS over transitions passing the filter.
template <typename Filter, typename Pred>
std::vector<int> bfsPathWithin(const ELAutomaton& aut, Filter usable, int src, Pred accept)
{
    std::map<int, int> parent;
    std::vector<int> frontier = {src};
    parent[src] = -1;
    auto build = [&](int v) {
        std::vector<int> path;
        for (int x = v; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    };
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        for (int v : frontier)
            if (accept(v)) return build(v);
        std::vector<int> next;
        for (int v : frontier)
            for (const auto& t : aut.out[v])
                if (usable(v, t) && !parent.count(t.dst)) {
                    parent[t.dst] = v;
                    next.push_back(t.dst);
                }
        frontier = std::move(next);
    }
    return {};
}

}  // namespace

ColorSet lassoInfinitySetAut(const ELAutomaton& aut, const AcceptingLasso& lasso)
{
    if (lasso.loopColors.size() == lasso.loop.size()) {
        ColorSet inf;
        for (ColorSet c : lasso.loopColors) inf = inf.unionWith(c);
        return inf;
    }
    auto edgeColors = [&](int a, int b) {
        for (const auto& t : aut.out[a])
            if (t.dst == b) return t.colors;
        throw StructuralError("lasso: missing transition");
    };
    ColorSet inf;
    for (size_t i = 0; i + 1 < lasso.loop.size(); i++)
        inf = inf.unionWith(edgeColors(lasso.loop[i], lasso.loop[i + 1]));
    inf = inf.unionWith(edgeColors(lasso.loop.back(), lasso.loop.front()));
    return inf;
}

AcceptingLasso witnessLassoWithClass(const ELAutomaton& aut, const AcceptanceClass& cls, int state)
{
    std::vector<GoodComponent> comps = goodComponents(aut, cls);
    std::vector<char> goal(aut.stateCount(), 0);
    for (const GoodComponent& c : comps)
        for (int s : c.states) goal[s] = 1;
    std::vector<int> path = bfsPath(aut, state, goal);
    if (path.empty()) throw Error("witnessLasso: state is empty");

    int entry = path.back();
    const GoodComponent* comp = nullptr;
    for (const GoodComponent& c : comps)
        if (std::binary_search(c.states.begin(), c.states.end(), entry)) {
            comp = &c;
            break;
        }

    std::vector<char> member(aut.stateCount(), 0);
    for (int s : comp->states) member[s] = 1;

    // Cover every component color, then return to the entry. Only
    // transitions whose colors fit inside the component's color set are
    // walked: components can come from restricted views (Rabin and Streett
    // delete transitions), and a wider transition could reintroduce a
    // forbidden color. The in-view subgraph is strongly connected and fits
    // the restriction, so reachability is preserved and the loop realizes
    // the component's colors exactly.
    auto usable = [&](int, const ELAutomaton::Transition& t) {
        return member[t.dst] && t.colors.subsetOf(comp->colors);
    };
    auto pickColors = [&](int from, int to, ColorId needed) {
        for (const auto& t : aut.out[from])
            if (usable(from, t) && t.dst == to && (needed < 0 || t.colors.has(needed)))
                return t.colors;
        throw InternalError("witnessLasso: walked transition vanished");
    };

    std::vector<int> walked;
    std::vector<ColorSet> walkedColors;
    auto append = [&](const std::vector<int>& seg, ColorId finalNeeded) {
        int prev = seg.front();
        for (size_t i = 1; i < seg.size(); i++) {
            ColorId needed = (i + 1 == seg.size()) ? finalNeeded : -1;
            walkedColors.push_back(pickColors(prev, seg[i], needed));
            walked.push_back(seg[i]);
            prev = seg[i];
        }
    };

    int cur = entry;
    auto covers = [&](int v, ColorId c) {
        for (const auto& t : aut.out[v])
            if (usable(v, t) && t.colors.has(c)) return true;
        return false;
    };
    for (ColorId c : comp->colors.toList()) {
        std::vector<int> seg =
            bfsPathWithin(aut, usable, cur, [&](int v) { return covers(v, c); });
        if (seg.empty()) throw InternalError("witnessLasso: color unreachable in component");
        int target = -1;
        for (const auto& t : aut.out[seg.back()])
            if (usable(seg.back(), t) && t.colors.has(c)) {
                target = t.dst;
                break;
            }
        append(seg, -1);
        walkedColors.push_back(pickColors(seg.back(), target, c));
        walked.push_back(target);
        cur = target;
    }
    if (walked.empty()) {
        // No colors: shortest cycle entry -> entry over colorless moves.
        std::vector<int> best;
        for (const auto& t : aut.out[entry]) {
            if (!usable(entry, t)) continue;
            std::vector<int> back =
                bfsPathWithin(aut, usable, t.dst, [&](int v) { return v == entry; });
            if (back.empty()) continue;
            if (best.empty() || 1 + back.size() < best.size()) {
                best = {entry};
                best.insert(best.end(), back.begin(), back.end());
            }
        }
        if (best.empty()) throw InternalError("witnessLasso: component has no cycle");
        append(best, -1);
    } else if (cur != entry) {
        std::vector<int> back = bfsPathWithin(aut, usable, cur, [&](int v) { return v == entry; });
        if (back.empty()) throw InternalError("witnessLasso: cannot return to entry");
        append(back, -1);
    }

    AcceptingLasso lasso;
    lasso.stem.assign(path.begin(), path.end() - 1);
    lasso.loop.push_back(entry);
    lasso.loop.insert(lasso.loop.end(), walked.begin(), walked.end() - 1);
    lasso.loopColors = std::move(walkedColors);

    if (!aut.acceptance.eval(lassoInfinitySetAut(aut, lasso)))
        throw InternalError("witnessLasso: constructed lasso is not accepting");
    return lasso;
}

AcceptingLasso witnessLasso(const ELAutomaton& aut, int state)
{
    return witnessLassoWithClass(aut, classifyAcceptance(aut.acceptance), state);
}

std::string automatonToText(const ELAutomaton& aut, const std::vector<std::string>& colorNames)
{
    std::string out = "automaton 1\nstates: " + std::to_string(aut.stateCount()) + "\n";
    if (aut.initial >= 0) out += "initial: " + std::to_string(aut.initial) + "\n";
    for (int s = 0; s < aut.stateCount(); s++) {
        for (const auto& t : aut.out[s]) {
            out += "trans " + std::to_string(s) + " " + std::to_string(t.dst) + " {";
            bool first = true;
            for (ColorId c : t.colors.toList()) {
                if (!first) out += ",";
                out += c < (int)colorNames.size() ? colorNames[c] : "c" + std::to_string(c);
                first = false;
            }
            out += "}\n";
        }
    }
    out += "acceptance: " + aut.acceptance.toString(colorNames) + "\n";
    return out;
}

}  // namespace oblige
