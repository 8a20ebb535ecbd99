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

// GHZ and Bell labels, the eight composite operations and the GHZ
// transformation table. The table is computed once from state vectors; the
// printed version in reference_tables.hpp is only compared against.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bqsdc/labels.hpp"
#include "bqsdc/qcore.hpp"
#include "bqsdc/reference_tables.hpp"

namespace bqsdc {

inline StateVector ghz_state(GhzLabel label) { return StateVector(3, detail::ghz_amplitudes(label.value())); }

inline StateVector bell_state(BellLabel label) { return StateVector(2, detail::bell_amplitudes(label.index())); }

struct CompositeOp {
  SingleQubitOp first;
  SingleQubitOp second;
};

/// U_0 = sz(x)sz, U_1 = I(x)sz, U_2 = isy(x)sz, U_3 = sx(x)sz,
/// U_4 = I(x)sx, U_5 = sz(x)sx, U_6 = sx(x)sx, U_7 = isy(x)sx.
constexpr CompositeOp composite(OpLabel k) {
  using enum SingleQubitOp;
  constexpr std::array<CompositeOp, 8> table = {{
      {SZ, SZ}, {I, SZ}, {ISY, SZ}, {SX, SZ}, {I, SX}, {SZ, SX}, {SX, SX}, {ISY, SX},
  }};
  return table[k.value()];
}

/// U_k carries the three bits of k, most significant first (U_2 <-> 010).
constexpr OpLabel message_to_op(MessageTriple m) { return OpLabel(m.value()); }
constexpr MessageTriple op_to_message(OpLabel k) { return MessageTriple(k.value()); }

/// First factor of U_k on q1, second on q2.
inline StateVector apply_composite(const StateVector& s, OpLabel k, std::size_t q1, std::size_t q2) {
  if (q1 == q2) throw std::invalid_argument("apply_composite: target qubits must differ");
  const CompositeOp op = composite(k);
  return apply_single(apply_single(s, op.first, q1), op.second, q2);
}

struct GhzMatch {
  GhzLabel label;
  Amp phase;  // s == phase * ghz_state(label)
};

/// Identifies a 3-qubit state as a GHZ basis state up to global phase.
inline std::optional<GhzMatch> classify_ghz(const StateVector& s) {
  if (s.num_qubits() != 3) throw std::invalid_argument("classify_ghz: expected 3 qubits");
  for (GhzLabel t : GhzLabel::all()) {
    const Amp overlap = inner(ghz_state(t), s);
    if (std::abs(overlap) > 1.0 - kAmpTol) return GhzMatch{t, overlap / std::abs(overlap)};
  }
  return std::nullopt;
}

struct TransformEntry {
  GhzLabel result;
  Amp phase;
};

/// transform[p][k]: the GHZ state reached by applying U_k to particles 1 and 2
/// of |Psi_p>, with the phase picked up along the way.
class TransformTable {
 public:
  static const TransformTable& instance() {
    static const TransformTable table;
    return table;
  }

  const TransformEntry& at(GhzLabel p, OpLabel k) const { return entries_[p.value()][k.value()]; }
  bool closed() const noexcept { return closed_; }

 private:
  TransformTable() {
    for (GhzLabel p : GhzLabel::all()) {
      const StateVector initial = ghz_state(p);
      for (OpLabel k : OpLabel::all()) {
        const auto match = classify_ghz(apply_composite(initial, k, 0, 1));
        if (!match) {
          closed_ = false;
          continue;
        }
        entries_[p.value()][k.value()] = {match->label, match->phase};
      }
    }
  }

  std::array<std::array<TransformEntry, 8>, 8> entries_{};
  bool closed_ = true;
};

inline GhzLabel transform_label(GhzLabel initial, OpLabel k) {
  return TransformTable::instance().at(initial, k).result;
}

/// The unique k with transform_label(initial, k) == result.
inline OpLabel invert_transform(GhzLabel initial, GhzLabel result) {
  for (OpLabel k : OpLabel::all()) {
    if (transform_label(initial, k) == result) return k;
  }
  throw std::logic_error("invert_transform: row of the transformation table is not a permutation");
}

/// Label-level composition: the single op equivalent to U_k followed by U_l,
/// found by brute force against every GHZ state.
inline std::optional<OpLabel> compose(OpLabel k, OpLabel l) {
  for (OpLabel m : OpLabel::all()) {
    bool ok = true;
    for (GhzLabel p : GhzLabel::all()) {
      const StateVector twice = apply_composite(apply_composite(ghz_state(p), k, 0, 1), l, 0, 1);
      if (!equal_up_to_global_phase(twice, apply_composite(ghz_state(p), m, 0, 1))) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  return std::nullopt;
}

struct Table1Entry {
  GhzLabel initial;
  OpLabel op;
  GhzLabel expected;            // from the printed table
  std::optional<GhzLabel> got;  // from the state-vector oracle
  Amp phase{0.0};
  bool match = false;
};

struct Table1Report {
  std::vector<Table1Entry> entries;
  std::size_t mismatches = 0;
  bool rows_are_permutations = true;
  bool phases_are_signs = true;
  bool xor_closed_form = true;  // transform(p, k) == p ^ k everywhere
  bool ok() const noexcept { return mismatches == 0 && rows_are_permutations && phases_are_signs; }
};

/// Recomputes every (initial, U_k) pair from state vectors and compares it
/// with both the cached table and the printed fixture.
inline Table1Report verify_table1() {
  Table1Report report;
  for (GhzLabel p : GhzLabel::all()) {
    std::array<bool, 8> seen{};
    for (OpLabel k : OpLabel::all()) {
      Table1Entry e{p, k, GhzLabel(0), std::nullopt};
      // Printed table: row = outcome r, column = initial c, cell = op index.
      for (std::size_t r = 0; r < 8; ++r) {
        if (reference::kTransformTable[r][p.value()] == k.value()) e.expected = GhzLabel(r);
      }
      const auto match = classify_ghz(apply_composite(ghz_state(p), k, 0, 1));
      if (match) {
        e.got = match->label;
        e.phase = match->phase;
        seen[match->label.value()] = true;
        const bool sign = std::abs(std::imag(e.phase)) < kAmpTol && std::abs(std::abs(std::real(e.phase)) - 1.0) < kAmpTol;
        report.phases_are_signs = report.phases_are_signs && sign;
        report.xor_closed_form = report.xor_closed_form && match->label.value() == (p.value() ^ k.value());
      }
      e.match = e.got && *e.got == e.expected && *e.got == transform_label(p, k);
      if (!e.match) ++report.mismatches;
      report.entries.push_back(e);
    }
    for (bool s : seen) report.rows_are_permutations = report.rows_are_permutations && s;
  }
  return report;
}

}  // namespace bqsdc
