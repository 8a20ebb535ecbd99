// Copyright 2026 The bqsdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bqsdc {

/// Range-checked index in [0, Count) tagged by what it names.
template <class Tag, std::uint8_t Count>
class Label {
 public:
  static constexpr std::size_t kCount = Count;

  constexpr Label() = default;
  constexpr explicit Label(std::size_t v) : value_(static_cast<std::uint8_t>(v)) {
    if (v >= Count) throw std::out_of_range(std::string(Tag::kPrefix) + " index out of range");
  }

  constexpr std::size_t value() const noexcept { return value_; }
  constexpr auto operator<=>(const Label&) const = default;

  static constexpr std::array<Label, Count> all() {
    std::array<Label, Count> out{};
    for (std::size_t i = 0; i < Count; ++i) out[i] = Label(i);
    return out;
  }

  /// "psi3", "U5", "c7": the spellings used in flags and files.
  std::string str() const { return std::string(Tag::kPrefix) + std::to_string(value_); }

  static Label parse(std::string_view s) {
    const std::string_view prefix = Tag::kPrefix;
    if (s.size() == prefix.size() + 1 && s.substr(0, prefix.size()) == prefix) {
      const char c = s.back();
      if (c >= '0' && c < static_cast<char>('0' + Count)) return Label(static_cast<std::size_t>(c - '0'));
    }
    throw std::invalid_argument("cannot parse '" + std::string(s) + "' as " + std::string(prefix) + "<index>");
  }

 private:
  std::uint8_t value_ = 0;
};

struct GhzTag {
  static constexpr std::string_view kPrefix = "psi";
};
struct OpTag {
  static constexpr std::string_view kPrefix = "U";
};
struct CollectionTag {
  static constexpr std::string_view kPrefix = "c";
};

/// |Psi_0> ... |Psi_7>
using GhzLabel = Label<GhzTag, 8>;
/// U_0 ... U_7
using OpLabel = Label<OpTag, 8>;
/// C_0 ... C_7
using CollectionLabel = Label<CollectionTag, 8>;

struct BellLabel {
  bool flip = false;  // false: Phi, true: Psi
  bool minus = false;

  constexpr std::size_t index() const noexcept { return (std::size_t{flip} << 1) | std::size_t{minus}; }
  static constexpr BellLabel from_index(std::size_t i) {
    if (i >= 4) throw std::out_of_range("Bell index out of range");
    return {((i >> 1) & 1) != 0, (i & 1) != 0};
  }
  constexpr auto operator<=>(const BellLabel&) const = default;

  std::string str() const { return std::string(flip ? "psi" : "phi") + (minus ? "-" : "+"); }
  static BellLabel parse(std::string_view s) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (from_index(i).str() == s) return from_index(i);
    }
    throw std::invalid_argument("cannot parse '" + std::string(s) + "' as a Bell label");
  }
};

inline constexpr BellLabel kPhiPlus{false, false};
inline constexpr BellLabel kPhiMinus{false, true};
inline constexpr BellLabel kPsiPlus{true, false};
inline constexpr BellLabel kPsiMinus{true, true};

/// Three message bits (b2 b1 b0), written most significant first.
class MessageTriple {
 public:
  constexpr MessageTriple() = default;
  constexpr explicit MessageTriple(std::size_t value) : value_(static_cast<std::uint8_t>(value)) {
    if (value >= 8) throw std::out_of_range("message triple value out of range");
  }

  static MessageTriple parse(std::string_view bits) {
    if (bits.size() != 3) throw std::invalid_argument("message triple needs exactly 3 bits");
    std::size_t v = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("message bits must be 0/1");
      v = (v << 1) | static_cast<std::size_t>(c == '1');
    }
    return MessageTriple(v);
  }

  constexpr std::size_t value() const noexcept { return value_; }
  constexpr bool bit(std::size_t i) const noexcept { return ((value_ >> i) & 1) != 0; }
  constexpr auto operator<=>(const MessageTriple&) const = default;

  std::string str() const {
    return {bit(2) ? '1' : '0', bit(1) ? '1' : '0', bit(0) ? '1' : '0'};
  }

 private:
  std::uint8_t value_ = 0;
};

}  // namespace bqsdc
