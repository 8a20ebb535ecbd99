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

// Golden fixtures transcribed from the protocol's reference tables. The
// simulator never reads these to compute anything; they exist so the
// oracle-derived tables can be compared against the printed ones.

#include <array>
#include <cstdint>
#include <string_view>

namespace bqsdc::reference {

/// Printed transformation table: entry [r][c] is the composite op index that
/// relates GHZ state c and GHZ state r.
inline constexpr std::array<std::array<std::uint8_t, 8>, 8> kTransformTable = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
}};

/// Printed swap-outcome table: entry [g1][g2] is the collection index for
/// |Psi_g1>_{A1B1C1} (x) |Psi_g2>_{A2B2C2}.
inline constexpr std::array<std::array<std::uint8_t, 8>, 8> kCollectionTable = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
}};

/// Printed member sets of C_0..C_7, each triple written as the Bell states of
/// pairs (A1A2, B1B2, C1C2).
using TripleText = std::array<std::string_view, 3>;
inline constexpr std::array<std::array<TripleText, 8>, 8> kCollectionMembers = {{
    {{{"phi+", "phi+", "phi+"}, {"phi+", "phi-", "phi-"}, {"phi-", "phi+", "phi-"}, {"phi-", "phi-", "phi+"},
      {"psi+", "psi+", "psi+"}, {"psi+", "psi-", "psi-"}, {"psi-", "psi+", "psi-"}, {"psi-", "psi-", "psi+"}}},
    {{{"phi+", "phi+", "phi-"}, {"phi+", "phi-", "phi+"}, {"phi-", "phi+", "phi+"}, {"phi-", "phi-", "phi-"},
      {"psi+", "psi+", "psi-"}, {"psi+", "psi-", "psi+"}, {"psi-", "psi+", "psi+"}, {"psi-", "psi-", "psi-"}}},
    {{{"psi+", "phi+", "phi+"}, {"psi+", "phi-", "phi-"}, {"psi-", "phi+", "phi-"}, {"psi-", "phi-", "phi+"},
      {"phi+", "psi+", "psi+"}, {"phi+", "psi-", "psi-"}, {"phi-", "psi+", "psi-"}, {"phi-", "psi-", "psi+"}}},
    {{{"psi+", "phi+", "phi-"}, {"psi+", "phi-", "phi+"}, {"psi-", "phi+", "phi+"}, {"psi-", "phi-", "phi-"},
      {"phi+", "psi+", "psi-"}, {"phi+", "psi-", "psi+"}, {"phi-", "psi+", "psi+"}, {"phi-", "psi-", "psi-"}}},
    {{{"phi+", "psi+", "phi+"}, {"phi+", "psi-", "phi-"}, {"phi-", "psi+", "phi-"}, {"phi-", "psi-", "phi+"},
      {"psi+", "phi+", "psi+"}, {"psi+", "phi-", "psi-"}, {"psi-", "phi+", "psi-"}, {"psi-", "phi-", "psi+"}}},
    {{{"phi+", "psi+", "phi-"}, {"phi+", "psi-", "phi+"}, {"phi-", "psi+", "phi+"}, {"phi-", "psi-", "phi-"},
      {"psi+", "phi+", "psi-"}, {"psi+", "phi-", "psi+"}, {"psi-", "phi+", "psi+"}, {"psi-", "phi-", "psi-"}}},
    {{{"psi+", "psi+", "phi+"}, {"psi+", "psi-", "phi-"}, {"psi-", "psi+", "phi-"}, {"psi-", "psi-", "phi+"},
      {"phi+", "phi+", "psi+"}, {"phi+", "phi-", "psi-"}, {"phi-", "phi+", "psi-"}, {"phi-", "phi-", "psi+"}}},
    {{{"psi+", "psi+", "phi-"}, {"psi+", "psi-", "phi+"}, {"psi-", "psi+", "phi+"}, {"psi-", "psi-", "phi-"},
      {"phi+", "phi+", "psi-"}, {"phi+", "phi-", "psi+"}, {"phi-", "phi+", "psi+"}, {"phi-", "phi-", "psi-"}}},
}};

}  // namespace bqsdc::reference
