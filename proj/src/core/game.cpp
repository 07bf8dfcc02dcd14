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

#include "game.hpp"

#include <algorithm>
#include <map>

namespace oblige {

Arena::Arena(int nodeCount, std::vector<Owner> owners, std::vector<Edge> edges)
    : nodeCount_(nodeCount), owners_(std::move(owners))
{
    if (nodeCount_ <= 0) throw StructuralError("arena: node count must be positive");
    if ((int)owners_.size() != nodeCount_)
        throw StructuralError("arena: owner list does not match node count");

    // Merge parallel edges by color union.
    std::map<std::pair<int, int>, ColorSet> merged;
    for (const Edge& e : edges) {
        if (e.src < 0 || e.src >= nodeCount_ || e.dst < 0 || e.dst >= nodeCount_)
            throw StructuralError("arena: edge endpoint out of range");
        merged[{e.src, e.dst}] = merged[{e.src, e.dst}].unionWith(e.colors);
    }
    edges_.reserve(merged.size());
    for (auto& [key, colors] : merged) edges_.push_back({key.first, key.second, colors});

    outStart_.assign(nodeCount_ + 1, 0);
    for (const Edge& e : edges_) outStart_[e.src + 1]++;
    for (int v = 0; v < nodeCount_; v++) outStart_[v + 1] += outStart_[v];
    outIndex_.resize(edges_.size());
    std::vector<int> fill(outStart_.begin(), outStart_.end() - 1);
    for (int i = 0; i < (int)edges_.size(); i++) outIndex_[fill[edges_[i].src]++] = i;

    for (int v = 0; v < nodeCount_; v++)
        if (out(v).empty())
            throw StructuralError("arena: node " + std::to_string(v) + " has no successor");
}

std::optional<int> Arena::edgeBetween(int v, int w) const
{
    for (int idx : out(v))
        if (edges_[idx].dst == w) return idx;
    return std::nullopt;
}

ObligingGame::ObligingGame(Arena arena, std::vector<std::string> nodeNames,
                           std::vector<std::string> colorNames, Formula strong, Formula weak)
    : arena_(std::move(arena)),
      nodeNames_(std::move(nodeNames)),
      colorNames_(std::move(colorNames)),
      strong_(std::move(strong)),
      weak_(std::move(weak))
{
    if ((int)nodeNames_.size() != arena_.nodeCount())
        throw StructuralError("game: node name list does not match node count");
    if ((int)colorNames_.size() > ColorSet::kMaxColors)
        throw GuardError("game: too many colors");

    ColorSet universe;
    for (ColorId c = 0; c < (int)colorNames_.size(); c++) universe.add(c);
    if (!strong_.colors().subsetOf(universe) || !weak_.colors().subsetOf(universe))
        throw StructuralError("game: objective references an undeclared color");

    strongColors_ = strong_.colors();
    weakColors_ = weak_.colors();
    for (ColorId c = 0; c < (int)colorNames_.size(); c++)
        if (strongColors_.has(c)) strongColorList_.push_back(c);

    ColorSet usable = strongColors_.unionWith(weakColors_);
    for (const Edge& e : arena_.edges())
        if (!e.colors.subsetOf(usable))
            throw StructuralError("game: edge color outside the strong/weak universe");
}

std::optional<int> ObligingGame::nodeByName(const std::string& name) const
{
    for (int v = 0; v < (int)nodeNames_.size(); v++)
        if (nodeNames_[v] == name) return v;
    return std::nullopt;
}

std::optional<ColorId> ObligingGame::colorByName(const std::string& name) const
{
    for (ColorId c = 0; c < (int)colorNames_.size(); c++)
        if (colorNames_[c] == name) return c;
    return std::nullopt;
}

std::string ObligingGame::pathToString(std::span<const int> nodes) const
{
    std::string out;
    for (int v : nodes) {
        if (!out.empty()) out += " ";
        out += nodeName(v);
    }
    return out;
}

namespace {

void requireEdge(const ObligingGame& game, int v, int w, const char* what)
{
    if (!game.arena().edgeBetween(v, w))
        throw StructuralError(std::string(what) + ": missing edge (" + game.nodeName(v) + "," +
                              game.nodeName(w) + ")");
}

}  // namespace

void validateLasso(const Lasso& lasso, const ObligingGame& game)
{
    if (lasso.loop.empty()) throw StructuralError("lasso: empty loop");
    auto inRange = [&](int v) { return v >= 0 && v < game.nodeCount(); };
    for (int v : lasso.stem)
        if (!inRange(v)) throw StructuralError("lasso: stem node out of range");
    for (int v : lasso.loop)
        if (!inRange(v)) throw StructuralError("lasso: loop node out of range");

    for (size_t i = 0; i + 1 < lasso.stem.size(); i++)
        requireEdge(game, lasso.stem[i], lasso.stem[i + 1], "lasso stem");
    if (!lasso.stem.empty()) requireEdge(game, lasso.stem.back(), lasso.loop.front(), "lasso junction");
    for (size_t i = 0; i + 1 < lasso.loop.size(); i++)
        requireEdge(game, lasso.loop[i], lasso.loop[i + 1], "lasso loop");
    requireEdge(game, lasso.loop.back(), lasso.loop.front(), "lasso closing edge");
}

ColorSet lassoInfinitySet(const Lasso& lasso, const ObligingGame& game)
{
    validateLasso(lasso, game);
    ColorSet inf;
    for (size_t i = 0; i + 1 < lasso.loop.size(); i++) {
        int e = *game.arena().edgeBetween(lasso.loop[i], lasso.loop[i + 1]);
        inf = inf.unionWith(game.arena().edge(e).colors);
    }
    int closing = *game.arena().edgeBetween(lasso.loop.back(), lasso.loop.front());
    return inf.unionWith(game.arena().edge(closing).colors);
}

ColorSet pathFingerprint(std::span<const int> path, ColorSet restrictTo, const ObligingGame& game)
{
    ColorSet fp;
    for (size_t i = 0; i + 1 < path.size(); i++) {
        auto e = game.arena().edgeBetween(path[i], path[i + 1]);
        if (!e)
            throw StructuralError("path: missing edge (" + game.nodeName(path[i]) + "," +
                                  game.nodeName(path[i + 1]) + ")");
        fp = fp.unionWith(game.arena().edge(*e).colors.intersect(restrictTo));
    }
    return fp;
}

}  // namespace oblige
