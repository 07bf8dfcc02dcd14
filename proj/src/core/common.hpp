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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblige {

using ColorId = int;

// Dense sets of color ids, backed by a 32-bit mask. All color universes in
// this library are interned to ids 0..31; the generic emptiness check guards
// at 16 colors long before this cap matters.
class ColorSet {
  public:
    static constexpr int kMaxColors = 32;

    constexpr ColorSet() = default;
    static constexpr ColorSet single(ColorId c) { return ColorSet(1u << c); }
    static constexpr ColorSet fromMask(uint32_t m) { return ColorSet(m); }
    static ColorSet fromList(const std::vector<ColorId>& cs)
    {
        ColorSet s;
        for (ColorId c : cs) s.add(c);
        return s;
    }

    constexpr bool has(ColorId c) const { return (bits_ >> c) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcount(bits_); }
    constexpr uint32_t mask() const { return bits_; }

    void add(ColorId c) { bits_ |= (1u << c); }
    constexpr ColorSet unionWith(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    constexpr ColorSet intersect(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    constexpr ColorSet minus(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
    constexpr bool subsetOf(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ColorSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr bool operator==(const ColorSet&) const = default;
    constexpr auto operator<=>(const ColorSet&) const = default;

    std::vector<ColorId> toList() const
    {
        std::vector<ColorId> out;
        for (ColorId c = 0; c < kMaxColors; c++)
            if (has(c)) out.push_back(c);
        return out;
    }

  private:
    explicit constexpr ColorSet(uint32_t bits) : bits_(bits) {}
    uint32_t bits_ = 0;
};

// Error hierarchy. The C API maps these onto status codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries a line number when one is known.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& msg)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line)
    {
    }
    int line() const { return line_; }

  private:
    int line_;
};

// A structurally broken object (lasso with a missing edge, bad node index).
class StructuralError : public Error {
  public:
    using Error::Error;
};

// A resource guard tripped (permutation count, certificate budget, ...).
class GuardError : public Error {
  public:
    using Error::Error;
};

class InternalError : public Error {
  public:
    using Error::Error;
};

// Trace output controlled by the OBLIGE_LOG environment variable
// (set to "debug" or "trace" to enable).
bool logEnabled();
void logLine(const std::string& msg);

}  // namespace oblige
