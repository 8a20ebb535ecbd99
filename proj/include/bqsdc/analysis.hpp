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

// Information-theoretic figures: Eve's uncertainty about the 64 op pairs,
// with and without the public announcement, Cabello efficiency, capacity and
// the static comparison with earlier bidirectional protocols.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqsdc/codebook.hpp"
#include "bqsdc/protocol.hpp"
#include "bqsdc/swap.hpp"

namespace bqsdc {

/// Probability of each (a, b) op pair, indexed a * 8 + b.
class ComboDistribution {
 public:
  static constexpr std::size_t kSize = 64;

  static ComboDistribution uniform() {
    ComboDistribution d;
    d.p_.fill(1.0 / kSize);
    return d;
  }

  static ComboDistribution point(OpLabel a, OpLabel b) {
    ComboDistribution d;
    d.p_[index(a, b)] = 1.0;
    return d;
  }

  /// Throws unless entries are nonnegative and sum to 1 within 1e-12.
  static ComboDistribution from(const std::array<double, kSize>& p) {
    double total = 0.0;
    for (double x : p) {
      if (!(x >= 0.0)) throw std::invalid_argument("combo distribution: negative or NaN probability");
      total += x;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("combo distribution must sum to 1");
    ComboDistribution d;
    d.p_ = p;
    return d;
  }

  static constexpr std::size_t index(OpLabel a, OpLabel b) noexcept { return a.value() * 8 + b.value(); }
  double operator()(OpLabel a, OpLabel b) const noexcept { return p_[index(a, b)]; }
  const std::array<double, kSize>& values() const noexcept { return p_; }

 private:
  std::array<double, kSize> p_{};
};

/// -sum p log2 p with 0 log 0 = 0.
template <class Range>
double shannon_entropy_bits(const Range& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

inline double shannon_entropy(const ComboDistribution& d) { return shannon_entropy_bits(d.values()); }

/// H(a, b | m): Eve sees the announcement m but not the initial label p,
/// which is uniform over the 8 GHZ states. Exhaustive over p and the 64 pairs.
inline double conditional_entropy_given_announcement(const ComboDistribution& prior) {
  std::array<std::array<double, ComboDistribution::kSize>, 8> joint{};  // [m][pair]
  for (GhzLabel p : GhzLabel::all()) {
    for (OpLabel a : OpLabel::all()) {
      for (OpLabel b : OpLabel::all()) {
        const CollectionLabel m = expected_announcement(p, a, b);
        joint[m.value()][ComboDistribution::index(a, b)] += prior(a, b) / 8.0;
      }
    }
  }
  double h = 0.0;
  for (const auto& row : joint) {
    double pm = 0.0;
    for (double x : row) pm += x;
    if (pm <= 0.0) continue;
    double hm = 0.0;
    for (double x : row) {
      if (x > 0.0) hm -= (x / pm) * std::log2(x / pm);
    }
    h += pm * hm;
  }
  return h;
}

inline constexpr double kReferenceEveEntropyBits = 6.0;
inline constexpr double kClaimedLeakageBits = 0.0;
inline constexpr double kLeakageFlagTol = 1e-12;

struct LeakageReport {
  double entropy_bits = 0.0;              // H(a, b), as computed
  double conditional_entropy_bits = 0.0;  // H(a, b | m), as computed
  double mutual_information_bits = 0.0;   // H - H(.|m)
  double reference_entropy_bits = kReferenceEveEntropyBits;
  double claimed_leakage_bits = kClaimedLeakageBits;
  bool discrepancy = false;  // computed leakage differs from the claim
};

inline LeakageReport leakage_report(const ComboDistribution& prior) {
  LeakageReport r;
  r.entropy_bits = shannon_entropy(prior);
  r.conditional_entropy_bits = conditional_entropy_given_announcement(prior);
  r.mutual_information_bits = r.entropy_bits - r.conditional_entropy_bits;
  r.discrepancy = std::abs(r.mutual_information_bits - r.claimed_leakage_bits) > kLeakageFlagTol;
  return r;
}

/// Empirical counterpart of the leakage figures, from observed
/// (a, b, announcement) triples.
struct EmpiricalLeakage {
  std::size_t samples = 0;
  std::array<double, 8> announcement_frequency{};
  double entropy_bits = 0.0;
  double conditional_entropy_bits = 0.0;
  double mutual_information_bits = 0.0;
  std::size_t inconsistent_pairs = 0;  // (a, b, m) with m != expected_announcement(., a, b)
};

inline EmpiricalLeakage empirical_leakage(const std::vector<GroupRecord>& groups) {
  std::array<std::array<double, ComboDistribution::kSize>, 8> counts{};
  EmpiricalLeakage e;
  for (const auto& g : groups) {
    if (!g.a_op || !g.b_op || !g.announcement) continue;
    ++e.samples;
    counts[g.announcement->value()][ComboDistribution::index(*g.a_op, *g.b_op)] += 1.0;
    if (expected_announcement(g.prepared, *g.a_op, *g.b_op) != *g.announcement) ++e.inconsistent_pairs;
  }
  if (e.samples == 0) return e;
  const double n = static_cast<double>(e.samples);
  std::array<double, ComboDistribution::kSize> pairs{};
  double h_joint = 0.0;
  for (std::size_t m = 0; m < 8; ++m) {
    for (std::size_t i = 0; i < ComboDistribution::kSize; ++i) {
      e.announcement_frequency[m] += counts[m][i] / n;
      pairs[i] += counts[m][i] / n;
      const double p = counts[m][i] / n;
      if (p > 0.0) h_joint -= p * std::log2(p);
    }
  }
  e.entropy_bits = shannon_entropy_bits(pairs);
  e.conditional_entropy_bits = h_joint - shannon_entropy_bits(e.announcement_frequency);
  e.mutual_information_bits = e.entropy_bits - e.conditional_entropy_bits;
  return e;
}

struct EfficiencyInputs {
  double secret_bits = 0.0;     // b_s
  double qubits = 0.0;          // q_t
  double classical_bits = 0.0;  // b_t
};

/// eta = b_s / (q_t + b_t)
inline double cabello_efficiency(const EfficiencyInputs& e) {
  if (e.secret_bits < 0.0 || e.qubits < 0.0 || e.classical_bits < 0.0) {
    throw std::invalid_argument("efficiency inputs must be nonnegative");
  }
  const double denom = e.qubits + e.classical_bits;
  if (!(denom > 0.0)) throw std::invalid_argument("efficiency: qubits + classical bits must be positive");
  return e.secret_bits / denom;
}

/// Per group: 3 + 3 secret bits, two GHZ triples (6 qubits), a 3-bit announcement.
inline constexpr EfficiencyInputs kThisProtocolAccounting{6.0, 6.0, 3.0};
inline constexpr std::size_t kBitsPerGroup = 6;

/// Secret bits per transmitted qubit; at most 1 for a Holevo-bound-saturating scheme.
inline double bits_per_qubit(const EfficiencyInputs& e) { return e.secret_bits / e.qubits; }

struct ComparisonRow {
  std::string protocol;
  std::vector<int> refs;
  int bits_per_round;
  int bits_leaked;
  std::optional<EfficiencyInputs> efficiency_inputs;
  bool leakage_claimed = false;  // leakage figure is a claim, not derived here

  std::optional<double> efficiency() const {
    if (!efficiency_inputs) return std::nullopt;
    return cabello_efficiency(*efficiency_inputs);
  }
};

inline std::vector<ComparisonRow> comparison_report() {
  return {
      {"Zhang; Nguyen; Man; Chen; Shan; Ye (second)", {15, 16, 18, 19, 25, 30, 35}, 4, 2, std::nullopt},
      {"Jin; Man; Man; Ye (first)", {20, 21, 23, 35}, 4, 3, std::nullopt},
      {"Man (improved)", {24}, 3, 2, std::nullopt},
      {"Ji; Yang", {22, 26}, 2, 1, std::nullopt},
      {"Shi; Gao", {31, 34}, 4, 0, EfficiencyInputs{4, 4, 2}},
      {"Shi", {32}, 2, 0, EfficiencyInputs{2, 2, 1}},
      {"Shi", {33}, 3, 0, EfficiencyInputs{3, 3, 1}},
      {"GHZ entanglement swapping", {}, 6, 0, kThisProtocolAccounting, true},
  };
}

}  // namespace bqsdc
