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

// Eavesdropping-check primitives shared by protocol sessions and the
// detection harness: GHZ correlation samples and single-particle decoys.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "bqsdc/codebook.hpp"
#include "bqsdc/lab.hpp"

namespace bqsdc {

enum class DecoyState : std::uint8_t { Zero, One, Plus, Minus };

inline constexpr std::array<DecoyState, 4> kDecoyStates = {DecoyState::Zero, DecoyState::One, DecoyState::Plus,
                                                           DecoyState::Minus};

constexpr BasisKind basis_of(DecoyState s) noexcept {
  return (s == DecoyState::Zero || s == DecoyState::One) ? BasisKind::Z : BasisKind::X;
}

/// Outcome index the state yields with certainty in its own basis.
constexpr std::size_t outcome_of(DecoyState s) noexcept {
  return (s == DecoyState::One || s == DecoyState::Minus) ? 1 : 0;
}

constexpr std::string_view name(DecoyState s) noexcept {
  switch (s) {
    case DecoyState::Zero: return "0";
    case DecoyState::One: return "1";
    case DecoyState::Plus: return "+";
    case DecoyState::Minus: return "-";
  }
  return "?";
}

inline StateVector decoy_state(DecoyState s) {
  return StateVector(1, basis_vectors(basis_of(s))[outcome_of(s)]);
}

inline DecoyState random_decoy_state(Rng& rng) { return kDecoyStates[rng.below(4)]; }

inline BasisKind random_check_basis(Rng& rng) { return rng.coin() ? BasisKind::X : BasisKind::Z; }

/// Whether Z- or X-basis outcome bits (A, B, C) can occur for |Psi_label>.
/// An outcome is an error iff its Born probability is zero.
inline bool ghz_outcome_possible(GhzLabel label, BasisKind basis, std::array<std::size_t, 3> bits) {
  if (basis != BasisKind::Z && basis != BasisKind::X) {
    throw std::invalid_argument("GHZ sample checks use Z or X");
  }
  static const auto table = [] {
    std::array<std::array<std::array<bool, 8>, 2>, 8> t{};
    for (GhzLabel g : GhzLabel::all()) {
      for (BasisKind b : {BasisKind::Z, BasisKind::X}) {
        const std::vector<MeasurementSpec> specs = {{b, {0}}, {b, {1}}, {b, {2}}};
        const std::vector<double> probs = joint_distribution(ghz_state(g), specs);
        for (std::size_t o = 0; o < 8; ++o) t[g.value()][b == BasisKind::X][o] = probs[o] > kZeroProbTol;
      }
    }
    return t;
  }();
  const std::size_t joint = (bits[0] << 2) | (bits[1] << 1) | bits[2];
  return table[label.value()][basis == BasisKind::X][joint];
}

struct GhzSampleOutcome {
  BasisKind basis;
  std::array<std::size_t, 3> bits;  // A, B, C
  bool error;
};

/// Bob measures the delivered C particle in `basis`; Alice measures her A
/// and B particles in the same basis.
inline GhzSampleOutcome check_ghz_sample(Lab& lab, ParticleId a, ParticleId b, ParticleId c, GhzLabel label,
                                         BasisKind basis, Rng& rng) {
  GhzSampleOutcome out{basis, {}, false};
  out.bits[2] = lab.measure({c}, basis, rng);
  out.bits[0] = lab.measure({a}, basis, rng);
  out.bits[1] = lab.measure({b}, basis, rng);
  out.error = !ghz_outcome_possible(label, basis, out.bits);
  return out;
}

struct DecoyOutcome {
  DecoyState prepared;
  std::size_t measured;
  bool error;
};

/// Bob measures a decoy in the announced preparation basis.
inline DecoyOutcome check_single_decoy(Lab& lab, ParticleId p, DecoyState prepared, Rng& rng) {
  const std::size_t got = lab.measure({p}, basis_of(prepared), rng);
  return {prepared, got, got != outcome_of(prepared)};
}

struct CheckResult {
  int step = 0;  // protocol step that runs the check: 2, 4 or 5
  std::size_t samples = 0;
  std::size_t errors = 0;
  double error_rate = 0.0;
  bool aborted = false;
};

inline CheckResult summarize_check(int step, std::size_t samples, std::size_t errors, double threshold) {
  CheckResult r{step, samples, errors};
  r.error_rate = samples == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(samples);
  r.aborted = r.error_rate > threshold;
  return r;
}

}  // namespace bqsdc
