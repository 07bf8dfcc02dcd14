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

#include "game_io.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace oblige {

namespace {

std::string stripComment(const std::string& line)
{
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Recursive-descent formula parser over a token-free character stream.
class FormulaParser {
  public:
    FormulaParser(const std::string& text, const std::vector<std::string>& colorNames, int line)
        : text_(text), colorNames_(colorNames), line_(line)
    {
    }

    Formula parse()
    {
        Formula f = parseOr();
        skipSpace();
        if (pos_ != text_.size()) fail("trailing input in formula");
        return f;
    }

  private:
    Formula parseOr()
    {
        Formula f = parseAnd();
        while (peek() == '|') {
            pos_++;
            f = Formula::disj(f, parseAnd());
        }
        return f;
    }

    Formula parseAnd()
    {
        Formula f = parsePrimary();
        while (peek() == '&') {
            pos_++;
            f = Formula::conj(f, parsePrimary());
        }
        return f;
    }

    Formula parsePrimary()
    {
        skipSpace();
        if (peek() == '(') {
            pos_++;
            Formula f = parseOr();
            expect(')');
            return f;
        }
        std::string word = readWord();
        if (word == "true") return Formula::t();
        if (word == "false") return Formula::f();
        if (word == "Inf" || word == "Fin") {
            expect('(');
            std::string name = readWord();
            expect(')');
            ColorId c = lookupColor(name);
            return word == "Inf" ? Formula::inf(c) : Formula::fin(c);
        }
        fail("expected Inf(..), Fin(..), true or false, got '" + word + "'");
        return Formula::t();
    }

    ColorId lookupColor(const std::string& name)
    {
        for (ColorId c = 0; c < (int)colorNames_.size(); c++)
            if (colorNames_[c] == name) return c;
        fail("undeclared color '" + name + "'");
        return -1;
    }

    void skipSpace()
    {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) pos_++;
    }

    char peek()
    {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        pos_++;
    }

    std::string readWord()
    {
        skipSpace();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
            pos_++;
        if (pos_ == start) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, msg); }

    const std::string& text_;
    const std::vector<std::string>& colorNames_;
    int line_;
    size_t pos_ = 0;
};

}  // namespace

Formula parseFormula(const std::string& text, const std::vector<std::string>& colorNames)
{
    return FormulaParser(text, colorNames, 0).parse();
}

ObligingGame parseGame(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;

    int nodeCount = -1;
    std::vector<std::string> names;
    std::vector<Owner> owners;
    std::vector<std::string> colorNames;
    bool haveColors = false, haveOwners = false, haveHeader = false;
    std::vector<Edge> edges;
    std::string strongText, weakText;
    int strongLine = 0, weakLine = 0;

    auto nodeIndex = [&](const std::string& tok) -> int {
        for (int v = 0; v < (int)names.size(); v++)
            if (names[v] == tok) return v;
        if (!tok.empty() && std::all_of(tok.begin(), tok.end(),
                                        [](char c) { return std::isdigit((unsigned char)c); })) {
            int v = std::stoi(tok);
            if (v >= 0 && v < nodeCount) return v;
        }
        throw ParseError(lineNo, "unknown node '" + tok + "'");
    };

    while (std::getline(in, raw)) {
        lineNo++;
        std::string line = stripComment(raw);
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;

        if (toks[0] == "oblige") {
            if (toks.size() != 2 || toks[1] != "1")
                throw ParseError(lineNo, "unsupported format version");
            haveHeader = true;
        } else if (toks[0] == "nodes:") {
            if (toks.size() != 2) throw ParseError(lineNo, "expected 'nodes: <n>'");
            nodeCount = std::stoi(toks[1]);
            if (nodeCount <= 0) throw ParseError(lineNo, "node count must be positive");
            names.clear();
            for (int v = 0; v < nodeCount; v++) names.push_back("v" + std::to_string(v));
        } else if (toks[0] == "names:") {
            if (nodeCount < 0) throw ParseError(lineNo, "'names:' before 'nodes:'");
            if ((int)toks.size() - 1 != nodeCount)
                throw ParseError(lineNo, "expected one name per node");
            names.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "owners:") {
            if (nodeCount < 0) throw ParseError(lineNo, "'owners:' before 'nodes:'");
            if (toks.size() != 2 || (int)toks[1].size() != nodeCount)
                throw ParseError(lineNo, "expected one E/A letter per node");
            for (char c : toks[1]) {
                if (c == 'E')
                    owners.push_back(Owner::Exists);
                else if (c == 'A')
                    owners.push_back(Owner::Forall);
                else
                    throw ParseError(lineNo, std::string("bad owner letter '") + c + "'");
            }
            haveOwners = true;
        } else if (toks[0] == "colors:") {
            colorNames.assign(toks.begin() + 1, toks.end());
            haveColors = true;
        } else if (toks[0] == "edge") {
            if (nodeCount < 0) throw ParseError(lineNo, "'edge' before 'nodes:'");
            if (!haveColors) throw ParseError(lineNo, "'edge' before 'colors:'");
            if (toks.size() != 4) throw ParseError(lineNo, "expected 'edge <src> <dst> {..}'");
            int src = nodeIndex(toks[1]);
            int dst = nodeIndex(toks[2]);
            const std::string& braces = toks[3];
            if (braces.front() != '{' || braces.back() != '}')
                throw ParseError(lineNo, "expected color set in braces");
            ColorSet colors;
            std::string inner = braces.substr(1, braces.size() - 2);
            std::istringstream cs(inner);
            std::string cname;
            while (std::getline(cs, cname, ',')) {
                if (cname.empty()) continue;
                auto it = std::find(colorNames.begin(), colorNames.end(), cname);
                if (it == colorNames.end())
                    throw ParseError(lineNo, "undeclared color '" + cname + "'");
                colors.add((ColorId)(it - colorNames.begin()));
            }
            edges.push_back({src, dst, colors});
        } else if (toks[0] == "strong:") {
            strongText = stripComment(raw).substr(stripComment(raw).find(':') + 1);
            strongLine = lineNo;
        } else if (toks[0] == "weak:") {
            weakText = stripComment(raw).substr(stripComment(raw).find(':') + 1);
            weakLine = lineNo;
        } else {
            throw ParseError(lineNo, "unknown directive '" + toks[0] + "'");
        }
    }

    if (!haveHeader) throw ParseError(0, "missing 'oblige 1' header");
    if (nodeCount < 0) throw ParseError(0, "missing 'nodes:' line");
    if (!haveOwners) throw ParseError(0, "missing 'owners:' line");
    if (!haveColors) throw ParseError(0, "missing 'colors:' line");
    if (strongText.empty()) throw ParseError(0, "missing 'strong:' line");
    if (weakText.empty()) throw ParseError(0, "missing 'weak:' line");

    Formula strong = FormulaParser(strongText, colorNames, strongLine).parse();
    Formula weak = FormulaParser(weakText, colorNames, weakLine).parse();

    try {
        return ObligingGame(Arena(nodeCount, std::move(owners), std::move(edges)), std::move(names),
                            std::move(colorNames), std::move(strong), std::move(weak));
    } catch (const StructuralError& e) {
        throw ParseError(0, e.what());
    }
}

std::string serializeGame(const ObligingGame& game)
{
    std::ostringstream out;
    out << "oblige 1\n";
    out << "nodes: " << game.nodeCount() << "\n";
    out << "names:";
    for (const auto& n : game.nodeNames()) out << " " << n;
    out << "\n";
    out << "owners: ";
    for (int v = 0; v < game.nodeCount(); v++)
        out << (game.arena().owner(v) == Owner::Exists ? 'E' : 'A');
    out << "\n";
    out << "colors:";
    for (const auto& c : game.colorNames()) out << " " << c;
    out << "\n";
    for (const Edge& e : game.arena().edges()) {
        out << "edge " << game.nodeName(e.src) << " " << game.nodeName(e.dst) << " {";
        bool first = true;
        for (ColorId c : e.colors.toList()) {
            if (!first) out << ",";
            out << game.colorNames()[c];
            first = false;
        }
        out << "}\n";
    }
    out << "strong: " << game.strong().toString(game.colorNames()) << "\n";
    out << "weak: " << game.weak().toString(game.colorNames()) << "\n";
    return out.str();
}

ObligingGame fixture(const std::string& name)
{
    if (name == "ex1" || name == "ex1-dashed") {
        // Nodes v1..v5; v1 and v4 belong to the system player.
        std::vector<std::string> names = {"v1", "v2", "v3", "v4", "v5"};
        std::vector<Owner> owners = {Owner::Exists, Owner::Forall, Owner::Forall, Owner::Exists,
                                     Owner::Forall};
        std::vector<std::string> colors = {"a", "b", "c", "d"};
        auto C = [](std::initializer_list<ColorId> cs) {
            ColorSet s;
            for (ColorId c : cs) s.add(c);
            return s;
        };
        std::vector<Edge> edges = {
            {0, 1, C({0})},  // v1 -a-> v2
            {1, 3, C({})},   // v2 ---> v4
            {1, 2, C({2})},  // v2 -c-> v3
            {2, 3, C({})},   // v3 ---> v4
            {4, 0, C({1})},  // v5 -b-> v1
            {3, 0, C({3})},  // v4 -d-> v1
            {3, 4, C({})},   // v4 ---> v5
        };
        if (name == "ex1-dashed") edges.push_back({4, 3, C({})});  // v5 ---> v4
        Formula strong = streettFormula({{0, 1}, {2, 3}});
        Formula weak = genBuchiFormula({0, 2});
        return ObligingGame(Arena(5, owners, edges), names, colors, strong, weak);
    }
    if (name == "ex10") {
        std::vector<std::string> names = {"x", "y", "z"};
        std::vector<Owner> owners = {Owner::Exists, Owner::Exists, Owner::Exists};
        std::vector<std::string> colors = {"a", "b", "c", "d"};
        auto C = [](std::initializer_list<ColorId> cs) {
            ColorSet s;
            for (ColorId c : cs) s.add(c);
            return s;
        };
        std::vector<Edge> edges = {
            {0, 1, C({0})},     // x -a-> y
            {1, 2, C({0})},     // y -a-> z
            {2, 1, C({0, 3})},  // z -a,d-> y
            {1, 1, C({1})},     // y -b-> y
            {2, 2, C({0, 2})},  // z -a,c-> z
        };
        // (Inf a -> Inf c) & Fin b, written positively.
        Formula strong =
            Formula::conj(Formula::disj(Formula::fin(0), Formula::inf(2)), Formula::fin(1));
        Formula weak = Formula::inf(3);
        return ObligingGame(Arena(3, owners, edges), names, colors, strong, weak);
    }
    throw Error("unknown fixture '" + name + "'");
}

ObjectiveClass objectiveClassFromName(const std::string& name)
{
    if (name == "buchi") return ObjectiveClass::Buchi;
    if (name == "genbuchi") return ObjectiveClass::GenBuchi;
    if (name == "streett") return ObjectiveClass::Streett;
    if (name == "rabin") return ObjectiveClass::Rabin;
    if (name == "parity") return ObjectiveClass::Parity;
    if (name == "gr1") return ObjectiveClass::GR1;
    if (name == "el") return ObjectiveClass::EL;
    throw Error("unknown objective class '" + name + "'");
}

std::string objectiveClassName(ObjectiveClass c)
{
    switch (c) {
        case ObjectiveClass::Buchi: return "buchi";
        case ObjectiveClass::GenBuchi: return "genbuchi";
        case ObjectiveClass::Streett: return "streett";
        case ObjectiveClass::Rabin: return "rabin";
        case ObjectiveClass::Parity: return "parity";
        case ObjectiveClass::GR1: return "gr1";
        case ObjectiveClass::EL: return "el";
    }
    return "?";
}

namespace {

Formula randomFormulaOfClass(ObjectiveClass cls, const std::vector<ColorId>& colors,
                             std::mt19937_64& rng)
{
    auto pick = [&](int n) { return (int)(rng() % (uint64_t)n); };
    switch (cls) {
        case ObjectiveClass::Buchi: return buchiFormula(colors[pick((int)colors.size())]);
        case ObjectiveClass::GenBuchi: return genBuchiFormula(colors);
        case ObjectiveClass::Streett:
        case ObjectiveClass::Rabin: {
            int pairCount = 1 + pick((int)colors.size());
            std::vector<std::pair<ColorId, ColorId>> pairs;
            for (int i = 0; i < pairCount; i++) {
                ColorId a = colors[pick((int)colors.size())];
                ColorId b = colors[pick((int)colors.size())];
                pairs.push_back({a, b});
            }
            return cls == ObjectiveClass::Streett ? streettFormula(pairs) : rabinFormula(pairs);
        }
        case ObjectiveClass::Parity: return parityFormula(colors);
        case ObjectiveClass::GR1: {
            if (colors.size() < 2) return gr1Formula({colors[0]}, {colors[0]});
            size_t split = 1 + (size_t)pick((int)colors.size() - 1);
            std::vector<ColorId> req(colors.begin(), colors.begin() + split);
            std::vector<ColorId> grant(colors.begin() + split, colors.end());
            return gr1Formula(req, grant);
        }
        case ObjectiveClass::EL: {
            // Random positive formula of bounded depth over the colors.
            struct Gen {
                std::mt19937_64& rng;
                const std::vector<ColorId>& colors;
                Formula go(int depth)
                {
                    int r = (int)(rng() % 6);
                    if (depth == 0 || r < 3) {
                        ColorId c = colors[rng() % colors.size()];
                        return (rng() % 2) ? Formula::inf(c) : Formula::fin(c);
                    }
                    Formula a = go(depth - 1), b = go(depth - 1);
                    return r < 5 ? Formula::conj(a, b) : Formula::disj(a, b);
                }
            };
            return Gen{rng, colors}.go(2);
        }
    }
    return Formula::t();
}

}  // namespace

ObligingGame randomGame(uint64_t seed, int nodeCount, int colorCount, double edgeDensity,
                        ObjectiveClass strongClass, ObjectiveClass weakClass)
{
    if (nodeCount < 1) throw Error("randomGame: need at least one node");
    if (colorCount < 1 || colorCount > 16) throw Error("randomGame: color count out of range");
    if (!(edgeDensity > 0.0) || edgeDensity > 1.0)
        throw Error("randomGame: density must be in (0,1]");

    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return (int)(rng() % (uint64_t)n); };

    std::vector<std::string> nodeNames, colorNames;
    for (int v = 0; v < nodeCount; v++) nodeNames.push_back("n" + std::to_string(v));
    for (int c = 0; c < colorCount; c++) colorNames.push_back("c" + std::to_string(c));

    std::vector<ColorId> all;
    for (ColorId c = 0; c < colorCount; c++) all.push_back(c);

    // Draw each objective over a random nonempty subset of the universe.
    auto drawSubset = [&]() {
        std::vector<ColorId> sub;
        for (ColorId c : all)
            if (rng() % 2) sub.push_back(c);
        if (sub.empty()) sub.push_back(all[pick(colorCount)]);
        return sub;
    };
    Formula strong = randomFormulaOfClass(strongClass, drawSubset(), rng);
    Formula weak = randomFormulaOfClass(weakClass, drawSubset(), rng);
    ColorSet usable = strong.colors().unionWith(weak.colors());
    std::vector<ColorId> usableList = usable.toList();

    std::vector<Owner> owners;
    for (int v = 0; v < nodeCount; v++)
        owners.push_back(rng() % 2 ? Owner::Exists : Owner::Forall);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto randomColors = [&]() {
        ColorSet s;
        for (ColorId c : usableList)
            if (rng() % 3 == 0) s.add(c);
        return s;
    };
    std::vector<Edge> edges;
    for (int v = 0; v < nodeCount; v++) {
        int degree = 0;
        for (int w = 0; w < nodeCount; w++) {
            if (unit(rng) <= edgeDensity) {
                edges.push_back({v, w, randomColors()});
                degree++;
            }
        }
        if (degree == 0) edges.push_back({v, pick(nodeCount), randomColors()});
    }

    return ObligingGame(Arena(nodeCount, owners, edges), nodeNames, colorNames, strong, weak);
}

}  // namespace oblige
