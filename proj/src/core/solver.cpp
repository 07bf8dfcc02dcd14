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

#include "solver.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

namespace oblige {

namespace {

class FixpointDriver {
  public:
    FixpointDriver(const SolverContext& ctx, SolveStats& stats)
        : ctx_(ctx), stats_(stats), levels_(ctx.priorityCount())
    {
        vars_.resize(levels_);
        stats_.iterationsPerLevel.assign(levels_, 0);
        for (int j = 0; j < levels_; j++) vars_[j] = init(j);
    }

    RealNodeSet run() { return eval(levels_ - 1); }

  private:
    RealNodeSet init(int j) const
    {
        return RealNodeSet(ctx_.space().size(), j % 2 == 0 ? 1 : 0);
    }

    RealNodeSet apply()
    {
        stats_.attractorCalls++;
        AttractorArgument arg;
        arg.byPriority = vars_;
        return dagAttractor(ctx_, arg, false).attracted;
    }

    // Naive iteration with same-polarity warm restarts: when a variable
    // moves (monotonically, in its polarity's direction), inner variables of
    // the opposite polarity restart while same-polarity ones keep their
    // values, which remain valid approximations from the correct side.
    RealNodeSet eval(int j)
    {
        if (j > 0 && !ctx_.priorityRealizable(j)) return eval(j - 1);
        while (true) {
            RealNodeSet value = j == 0 ? apply() : eval(j - 1);
            if (value == vars_[j]) return value;
            vars_[j] = std::move(value);
            stats_.iterationsPerLevel[j]++;
            for (int i = 0; i < j; i++)
                if (i % 2 != j % 2) vars_[i] = init(i);
        }
    }

    const SolverContext& ctx_;
    SolveStats& stats_;
    int levels_;
    std::vector<RealNodeSet> vars_;
};

// Certificate recording happens in a second, staged pass. A certificate from
// the uniformly stabilized values is safe but need not make progress: the
// challenger could cycle exits of odd priority forever. Recording each real
// node at its first appearance while the least-fixpoint levels grow from
// empty restores the progress ranking: odd-priority exits then land on nodes
// recorded strictly earlier within their level's stage.
//
// Greatest-fixpoint levels start at the known fixpoint (an upper bound of
// every context value) and shrink to the exact value for the current outer
// context; recordings made during their non-final iterations reference
// overshooting sets and are rolled back.
class RecordingDriver {
  public:
    RecordingDriver(const SolverContext& ctx, const RealNodeSet& fixpoint, SolveStats& stats)
        : ctx_(ctx), fixpoint_(fixpoint), stats_(stats), levels_(ctx.priorityCount())
    {
        vars_.resize(levels_);
        certificates_.resize(ctx.space().size());
    }

    std::vector<std::optional<Certificate>> run()
    {
        RealNodeSet result = eval(levels_ - 1);
        if (result != fixpoint_)
            throw InternalError("solver: recording pass disagrees with the fixpoint");
        for (int id = 0; id < (int)fixpoint_.size(); id++)
            if (fixpoint_[id] && !certificates_[id])
                throw InternalError("solver: fixpoint node without a recorded certificate");
        return std::move(certificates_);
    }

  private:
    RealNodeSet init(int j) const
    {
        return j % 2 == 0 ? fixpoint_ : RealNodeSet(ctx_.space().size(), 0);
    }

    RealNodeSet apply()
    {
        stats_.attractorCalls++;
        AttractorArgument arg;
        arg.byPriority = vars_;
        RealNodeSet wanted(ctx_.space().size(), 0);
        for (int id = 0; id < (int)wanted.size(); id++) wanted[id] = !certificates_[id];
        DagAttractorResult res = dagAttractor(ctx_, arg, true, &wanted);
        for (int id = 0; id < (int)res.attracted.size(); id++) {
            if (!res.attracted[id] || certificates_[id] || !res.certificates[id]) continue;
            certificates_[id] = std::move(res.certificates[id]);
            log_.push_back(id);
        }
        return res.attracted;
    }

    void rollback(size_t mark)
    {
        while (log_.size() > mark) {
            certificates_[log_.back()].reset();
            log_.pop_back();
        }
    }

    // Plain nested iteration, self-contained per level (no warm restarts):
    // the stage structure of the least-fixpoint levels is what the recorded
    // certificates' progress argument rests on. Levels whose priority no
    // exit can realize never constrain the attractor and pass through.
    RealNodeSet eval(int j)
    {
        if (j > 0 && !ctx_.priorityRealizable(j)) return eval(j - 1);
        vars_[j] = init(j);
        bool isNu = (j % 2 == 0);
        while (true) {
            size_t mark = log_.size();
            RealNodeSet value = j == 0 ? apply() : eval(j - 1);
            if (value == vars_[j]) return value;
            if (isNu) rollback(mark);
            vars_[j] = std::move(value);
        }
    }

    const SolverContext& ctx_;
    const RealNodeSet& fixpoint_;
    SolveStats& stats_;
    int levels_;
    std::vector<RealNodeSet> vars_;
    std::vector<std::optional<Certificate>> certificates_;
    std::vector<int> log_;
};

}  // namespace

SolveResult solveObliging(const ObligingGame& game, const SolveOptions& opts)
{
    auto start = std::chrono::steady_clock::now();
    SolverContext ctx(game, opts.maxStrongColors);

    SolveResult res;
    FixpointDriver driver(ctx, res.stats);
    res.fixpoint = driver.run();
    res.permCount = ctx.space().permCount;
    res.initialRank = ctx.table().initialRank();

    res.winningRegion.assign(game.nodeCount(), 0);
    for (int v = 0; v < game.nodeCount(); v++)
        res.winningRegion[v] = res.fixpoint[ctx.space().id(v, res.initialRank)];

    if (opts.recordCertificates) {
        // Consistency sweep at the stabilized values.
        AttractorArgument finalArg;
        finalArg.byPriority.assign(ctx.priorityCount(), res.fixpoint);
        res.stats.attractorCalls++;
        if (dagAttractor(ctx, finalArg, false).attracted != res.fixpoint)
            throw InternalError("solver: final sweep disagrees with the fixpoint");

        RecordingDriver recorder(ctx, res.fixpoint, res.stats);
        std::vector<std::optional<Certificate>> recorded = recorder.run();
        for (int id = 0; id < ctx.space().size(); id++) {
            if (!recorded[id]) continue;
            auto [v, rank] = ctx.space().decode(id);
            res.certificates.emplace(std::make_pair(v, rank), std::move(*recorded[id]));
        }

        // Exit-safety re-check: every universal position of every recorded
        // certificate may only exit into the fixpoint.
        const Arena& arena = game.arena();
        for (const auto& [key, cert] : res.certificates) {
            auto [v, rank] = key;
            if (!isValidCertificate(cert, game))
                throw InternalError("solver: recorded certificate is invalid");
            int p = 0;
            int len = cert.length();
            for (int step = 0; step < len + (int)cert.loop.size(); step++) {
                int pos = step < len ? step : (int)cert.stem.size() +
                                                  (step - len) % (int)cert.loop.size();
                int node = cert.nodeAt(pos);
                if (arena.owner(node) == Owner::Forall) {
                    for (int e : arena.out(node)) {
                        int exitPos = std::max(p, ctx.edgePosition(rank, e));
                        int exitRank = ctx.table().shiftByPos(rank, exitPos);
                        if (!res.fixpoint[ctx.space().id(arena.edge(e).dst, exitRank)])
                            throw InternalError("solver: certificate exit leaves the fixpoint");
                    }
                }
                int next = cert.nextPos(pos);
                auto edge = arena.edgeBetween(node, cert.nodeAt(next));
                p = std::max(p, ctx.edgePosition(rank, *edge));
            }
        }
    }

    res.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (logEnabled()) {
        int won = 0;
        for (char w : res.winningRegion) won += w;
        logLine("solve: " + std::to_string(game.nodeCount()) + " nodes, " +
                std::to_string(res.permCount) + " permutations, " + std::to_string(won) +
                " winners, " + std::to_string(res.stats.attractorCalls) + " attractor calls, " +
                std::to_string(res.stats.seconds) + "s");
    }
    return res;
}

std::string solveReportJson(const ObligingGame& game, const SolveResult& result,
                            const std::string& engine)
{
    nlohmann::json j;
    j["oblige_report"] = 1;
    j["engine"] = engine;
    nlohmann::json nodes = nlohmann::json::object();
    for (int v = 0; v < game.nodeCount(); v++)
        nodes[game.nodeName(v)] = result.winningRegion[v] ? "exists" : "forall";
    j["winners"] = nodes;

    nlohmann::json certs = nlohmann::json::array();
    for (const auto& [key, cert] : result.certificates) {
        nlohmann::json c;
        c["node"] = game.nodeName(key.first);
        c["permutation"] = key.second;
        nlohmann::json stem = nlohmann::json::array(), loop = nlohmann::json::array();
        for (int v : cert.stem) stem.push_back(game.nodeName(v));
        for (int v : cert.loop) loop.push_back(game.nodeName(v));
        c["stem"] = stem;
        c["loop"] = loop;
        certs.push_back(c);
    }
    j["certificates"] = certs;

    j["stats"]["attractor_calls"] = result.stats.attractorCalls;
    j["stats"]["iterations_per_level"] = result.stats.iterationsPerLevel;
    j["stats"]["seconds"] = result.stats.seconds;
    j["perm_count"] = result.permCount;
    return j.dump(2);
}

}  // namespace oblige
