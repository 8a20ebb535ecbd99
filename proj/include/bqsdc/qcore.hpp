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

// Dense state-vector engine for a handful of qubits.
//
// Basis index convention: qubit 0 is the most significant bit, so the ket
// |b0 b1 ... b(n-1)> lives at index 0b b0 b1 ... b(n-1). This matches how
// kets are written left to right for particles A, B, C.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bqsdc/rng.hpp"

namespace bqsdc {

using Amp = std::complex<double>;

/// Row-major 2x2 and 4x4 complex matrices.
using Mat2 = std::array<Amp, 4>;
using Mat4 = std::array<Amp, 16>;

inline constexpr double kAmpTol = 1e-9;
inline constexpr double kZeroProbTol = 1e-12;
inline constexpr std::size_t kMaxQubits = 8;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

class StateVector {
 public:
  /// Takes ownership of `amps`; throws unless the length is 2^num_qubits and
  /// the vector is normalized within kAmpTol.
  StateVector(std::size_t num_qubits, std::vector<Amp> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {
    check_shape();
    const double n = norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > kAmpTol) {
      throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
  }

  /// Rescales `amps` to unit norm. Throws if the norm is zero.
  static StateVector normalized(std::size_t num_qubits, std::vector<Amp> amps) {
    double sq = 0.0;
    for (const Amp& a : amps) sq += std::norm(a);
    if (!(sq > 0.0) || !std::isfinite(sq)) {
      throw std::invalid_argument("StateVector: cannot normalize a zero vector");
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (Amp& a : amps) a *= inv;
    return StateVector(num_qubits, std::move(amps));
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Amp> amps() const noexcept { return amps_; }
  const Amp& operator[](std::size_t i) const { return amps_.at(i); }

  double norm() const noexcept {
    double sq = 0.0;
    for (const Amp& a : amps_) sq += std::norm(a);
    return std::sqrt(sq);
  }

  bool operator==(const StateVector&) const = default;

 private:
  void check_shape() const {
    if (num_qubits_ == 0 || num_qubits_ > kMaxQubits) {
      throw std::invalid_argument("StateVector: qubit count must be in [1, " +
                                  std::to_string(kMaxQubits) + "]");
    }
    if (amps_.size() != (std::size_t{1} << num_qubits_)) {
      throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
    }
  }

  std::size_t num_qubits_;
  std::vector<Amp> amps_;
};

// ---------------------------------------------------------------------------
// Single-qubit operations

enum class SingleQubitOp : std::uint8_t { I, SX, ISY, SZ };

inline constexpr std::array<SingleQubitOp, 4> kSingleQubitOps = {
    SingleQubitOp::I, SingleQubitOp::SX, SingleQubitOp::ISY, SingleQubitOp::SZ};

/// I = |0><0| + |1><1|, sx = |0><1| + |1><0|, i*sy = |0><1| - |1><0|,
/// sz = |0><0| - |1><1|.
constexpr Mat2 matrix(SingleQubitOp op) noexcept {
  switch (op) {
    case SingleQubitOp::I: return {Amp{1}, Amp{0}, Amp{0}, Amp{1}};
    case SingleQubitOp::SX: return {Amp{0}, Amp{1}, Amp{1}, Amp{0}};
    case SingleQubitOp::ISY: return {Amp{0}, Amp{1}, Amp{-1}, Amp{0}};
    case SingleQubitOp::SZ: return {Amp{1}, Amp{0}, Amp{0}, Amp{-1}};
  }
  return {};
}

constexpr std::string_view name(SingleQubitOp op) noexcept {
  switch (op) {
    case SingleQubitOp::I: return "I";
    case SingleQubitOp::SX: return "SX";
    case SingleQubitOp::ISY: return "ISY";
    case SingleQubitOp::SZ: return "SZ";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Measurement bases

enum class BasisKind : std::uint8_t { Z, X, Bell, Ghz };

constexpr std::size_t arity(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::Z:
    case BasisKind::X: return 1;
    case BasisKind::Bell: return 2;
    case BasisKind::Ghz: return 3;
  }
  return 0;
}

constexpr std::string_view name(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::Z: return "Z";
    case BasisKind::X: return "X";
    case BasisKind::Bell: return "BELL";
    case BasisKind::Ghz: return "GHZ";
  }
  return "?";
}

namespace detail {

// First ket of each GHZ pair, indexed by label >> 1; the partner ket is its
// bitwise complement and the relative sign is (-1)^(label & 1).
inline constexpr std::array<std::size_t, 4> kGhzLeadingKet = {0b000, 0b100, 0b010, 0b110};

inline std::vector<Amp> ghz_amplitudes(std::size_t label) {
  std::vector<Amp> v(8);
  const std::size_t lead = kGhzLeadingKet.at(label >> 1);
  v[lead] = kInvSqrt2;
  v[lead ^ 0b111] = (label & 1) ? -kInvSqrt2 : kInvSqrt2;
  return v;
}

// Bell outcome index = flip * 2 + sign: Phi+, Phi-, Psi+, Psi-.
inline std::vector<Amp> bell_amplitudes(std::size_t index) {
  std::vector<Amp> v(4);
  const bool flip = (index >> 1) & 1;
  const bool minus = index & 1;
  const std::size_t lead = flip ? 0b01 : 0b00;
  v[lead] = kInvSqrt2;
  v[lead ^ 0b11] = minus ? -kInvSqrt2 : kInvSqrt2;
  return v;
}

}  // namespace detail

/// Orthonormal basis vectors of the measured subsystem, in outcome order.
/// Z: |0>,|1>. X: |+>,|->. Bell: Phi+, Phi-, Psi+, Psi-. GHZ: Psi_0..Psi_7.
inline const std::vector<std::vector<Amp>>& basis_vectors(BasisKind kind) {
  static const std::array<std::vector<std::vector<Amp>>, 4> table = [] {
    std::array<std::vector<std::vector<Amp>>, 4> t;
    t[0] = {{Amp{1}, Amp{0}}, {Amp{0}, Amp{1}}};
    t[1] = {{Amp{kInvSqrt2}, Amp{kInvSqrt2}}, {Amp{kInvSqrt2}, Amp{-kInvSqrt2}}};
    for (std::size_t i = 0; i < 4; ++i) t[2].push_back(detail::bell_amplitudes(i));
    for (std::size_t i = 0; i < 8; ++i) t[3].push_back(detail::ghz_amplitudes(i));
    return t;
  }();
  return table[static_cast<std::size_t>(kind)];
}

// ---------------------------------------------------------------------------
// State construction and unitaries

/// Computational basis state from a bit string such as "010".
inline StateVector make_basis_state(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("make_basis_state: empty bit string");
  if (bits.size() > kMaxQubits) throw std::invalid_argument("make_basis_state: too many qubits");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("make_basis_state: bits must be 0/1");
    index = (index << 1) | static_cast<std::size_t>(c == '1');
  }
  std::vector<Amp> amps(std::size_t{1} << bits.size());
  amps[index] = 1.0;
  return StateVector(bits.size(), std::move(amps));
}

/// Kronecker product; a's qubits come first.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
    throw std::length_error("tensor: result exceeds the qubit limit");
  }
  std::vector<Amp> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a.amps()[i] * b.amps()[j];
  }
  return StateVector::normalized(a.num_qubits() + b.num_qubits(), std::move(out));
}

namespace detail {

inline std::size_t bit_shift(std::size_t num_qubits, std::size_t q) { return num_qubits - 1 - q; }

inline void check_qubit(const StateVector& s, std::size_t q) {
  if (q >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
}

}  // namespace detail

inline StateVector apply_matrix(const StateVector& s, const Mat2& m, std::size_t q) {
  detail::check_qubit(s, q);
  const std::size_t mask = std::size_t{1} << detail::bit_shift(s.num_qubits(), q);
  std::vector<Amp> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i & mask) continue;
    const Amp a0 = s.amps()[i];
    const Amp a1 = s.amps()[i | mask];
    out[i] = m[0] * a0 + m[1] * a1;
    out[i | mask] = m[2] * a0 + m[3] * a1;
  }
  return StateVector::normalized(s.num_qubits(), std::move(out));
}

inline StateVector apply_single(const StateVector& s, SingleQubitOp op, std::size_t q) {
  return apply_matrix(s, matrix(op), q);
}

/// Two-qubit unitary; the matrix's row/column index is (bit(q1) << 1) | bit(q2).
inline StateVector apply_two(const StateVector& s, const Mat4& m, std::size_t q1, std::size_t q2) {
  detail::check_qubit(s, q1);
  detail::check_qubit(s, q2);
  if (q1 == q2) throw std::invalid_argument("apply_two: qubits must differ");
  const std::size_t m1 = std::size_t{1} << detail::bit_shift(s.num_qubits(), q1);
  const std::size_t m2 = std::size_t{1} << detail::bit_shift(s.num_qubits(), q2);
  std::vector<Amp> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i & (m1 | m2)) continue;
    const std::array<std::size_t, 4> idx = {i, i | m2, i | m1, i | m1 | m2};
    for (std::size_t r = 0; r < 4; ++r) {
      Amp acc = 0.0;
      for (std::size_t c = 0; c < 4; ++c) acc += m[r * 4 + c] * s.amps()[idx[c]];
      out[idx[r]] = acc;
    }
  }
  return StateVector::normalized(s.num_qubits(), std::move(out));
}

/// <a|b>
inline Amp inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  Amp acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a.amps()[i]) * b.amps()[i];
  return acc;
}

/// True iff some unit-modulus c has ||a - c b|| <= tol.
inline bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol = kAmpTol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  const Amp overlap = inner(b, a);
  const Amp c = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Amp{1.0};
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sq += std::norm(a.amps()[i] - c * b.amps()[i]);
  return std::sqrt(sq) <= tol;
}

// ---------------------------------------------------------------------------
// Projective measurement

struct Projection {
  double probability = 0.0;
  std::vector<Amp> collapsed;  // unnormalized; norm^2 == probability
};

namespace detail {

inline void check_targets(const StateVector& s, BasisKind kind, std::span<const std::size_t> qubits) {
  if (qubits.size() != arity(kind)) {
    throw std::invalid_argument("measurement: basis " + std::string(name(kind)) + " needs " +
                                std::to_string(arity(kind)) + " qubit(s)");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    check_qubit(s, qubits[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) throw std::invalid_argument("measurement: repeated qubit");
    }
  }
}

}  // namespace detail

/// Projects the listed qubits (first listed = most significant local bit)
/// onto basis vector `outcome`, leaving them in the global state.
inline Projection project(const StateVector& s, BasisKind kind, std::span<const std::size_t> qubits,
                          std::size_t outcome) {
  detail::check_targets(s, kind, qubits);
  const auto& basis = basis_vectors(kind);
  if (outcome >= basis.size()) throw std::out_of_range("project: outcome out of range");
  const std::vector<Amp>& b = basis[outcome];

  const std::size_t k = qubits.size();
  std::vector<std::size_t> masks(k);
  std::size_t measured = 0;
  for (std::size_t j = 0; j < k; ++j) {
    masks[j] = std::size_t{1} << detail::bit_shift(s.num_qubits(), qubits[j]);
    measured |= masks[j];
  }
  auto local_index = [&](std::size_t i) {
    std::size_t l = 0;
    for (std::size_t j = 0; j < k; ++j) l = (l << 1) | static_cast<std::size_t>((i & masks[j]) != 0);
    return l;
  };

  // Overlap of <b| with the measured register, per assignment of the rest.
  std::vector<Amp> overlap(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) overlap[i & ~measured] += std::conj(b[local_index(i)]) * s.amps()[i];

  Projection p;
  p.collapsed.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    p.collapsed[i] = b[local_index(i)] * overlap[i & ~measured];
    p.probability += std::norm(p.collapsed[i]);
  }
  return p;
}

/// Born-rule probabilities indexed by outcome (bit, sign, Bell index or GHZ label).
inline std::vector<double> born_distribution(const StateVector& s, BasisKind kind,
                                             std::span<const std::size_t> qubits) {
  detail::check_targets(s, kind, qubits);
  const std::size_t count = basis_vectors(kind).size();
  std::vector<double> probs(count);
  for (std::size_t o = 0; o < count; ++o) probs[o] = project(s, kind, qubits, o).probability;
  return probs;
}

struct MeasurementSpec {
  BasisKind kind;
  std::vector<std::size_t> qubits;
};

/// Distribution over joint outcomes of simultaneous measurements on disjoint
/// qubit groups. The joint index is mixed-radix with the first spec most
/// significant.
inline std::vector<double> joint_distribution(const StateVector& s, std::span<const MeasurementSpec> specs) {
  std::size_t total = 1;
  for (const auto& m : specs) total *= basis_vectors(m.kind).size();
  std::vector<double> out(total, 0.0);

  auto recurse = [&](auto&& self, const std::vector<Amp>& amps, double weight, std::size_t depth,
                     std::size_t prefix) -> void {
    if (depth == specs.size()) {
      out[prefix] = weight;
      return;
    }
    const auto& m = specs[depth];
    const std::size_t radix = basis_vectors(m.kind).size();
    const StateVector current = StateVector::normalized(s.num_qubits(), amps);
    for (std::size_t o = 0; o < radix; ++o) {
      Projection p = project(current, m.kind, m.qubits, o);
      if (p.probability <= kZeroProbTol * kZeroProbTol) continue;
      self(self, p.collapsed, weight * p.probability, depth + 1, prefix * radix + o);
    }
  };
  recurse(recurse, std::vector<Amp>(s.amps().begin(), s.amps().end()), 1.0, 0, 0);
  return out;
}

struct MeasureResult {
  std::size_t outcome;
  StateVector state;
};

/// Samples an outcome from the Born distribution and returns the
/// renormalized post-measurement state.
inline MeasureResult measure(const StateVector& s, BasisKind kind, std::span<const std::size_t> qubits, Rng& rng) {
  const std::vector<double> probs = born_distribution(s, kind, qubits);
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::size_t chosen = probs.size();
  std::size_t last_nonzero = 0;
  for (std::size_t o = 0; o < probs.size(); ++o) {
    if (probs[o] <= 0.0) continue;
    last_nonzero = o;
    cumulative += probs[o];
    if (u < cumulative) {
      chosen = o;
      break;
    }
  }
  if (chosen == probs.size()) chosen = last_nonzero;  // rounding at the top end
  Projection p = project(s, kind, qubits, chosen);
  return {chosen, StateVector::normalized(s.num_qubits(), std::move(p.collapsed))};
}

inline MeasureResult measure(const StateVector& s, BasisKind kind, std::initializer_list<std::size_t> qubits,
                             Rng& rng) {
  return measure(s, kind, std::span<const std::size_t>(qubits.begin(), qubits.size()), rng);
}

inline std::vector<double> born_distribution(const StateVector& s, BasisKind kind,
                                             std::initializer_list<std::size_t> qubits) {
  return born_distribution(s, kind, std::span<const std::size_t>(qubits.begin(), qubits.size()));
}

}  // namespace bqsdc
