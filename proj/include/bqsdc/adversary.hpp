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

// Eve's attacks on a particle in flight, and a Monte Carlo harness that
// estimates how often a single check sample exposes each attack.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bqsdc/checks.hpp"
#include "bqsdc/lab.hpp"

namespace bqsdc {

/// Which transmission Eve sits on.
enum class Target : std::uint8_t { SC, SB, SA };
enum class Strategy : std::uint8_t { None, InterceptResend, MeasureResend, EntangleMeasure };
enum class FakePolicy : std::uint8_t { Zero, One, Plus, Minus, Random };
enum class BasisPolicy : std::uint8_t { Z, X, Random };

constexpr std::string_view name(Target t) noexcept {
  switch (t) {
    case Target::SC: return "S_C";
    case Target::SB: return "S_B";
    case Target::SA: return "S_A";
  }
  return "?";
}

constexpr std::string_view name(Strategy s) noexcept {
  switch (s) {
    case Strategy::None: return "none";
    case Strategy::InterceptResend: return "intercept";
    case Strategy::MeasureResend: return "measure-resend";
    case Strategy::EntangleMeasure: return "entangle";
  }
  return "?";
}

constexpr std::string_view name(FakePolicy f) noexcept {
  switch (f) {
    case FakePolicy::Zero: return "0";
    case FakePolicy::One: return "1";
    case FakePolicy::Plus: return "+";
    case FakePolicy::Minus: return "-";
    case FakePolicy::Random: return "random";
  }
  return "?";
}

constexpr std::string_view name(BasisPolicy b) noexcept {
  switch (b) {
    case BasisPolicy::Z: return "Z";
    case BasisPolicy::X: return "X";
    case BasisPolicy::Random: return "random";
  }
  return "?";
}

inline Target parse_target(std::string_view s) {
  for (Target t : {Target::SC, Target::SB, Target::SA}) {
    if (s == name(t)) return t;
  }
  throw std::invalid_argument("unknown attack target '" + std::string(s) + "' (expected S_C, S_B or S_A)");
}

inline FakePolicy parse_fake_policy(std::string_view s) {
  for (FakePolicy f : {FakePolicy::Zero, FakePolicy::One, FakePolicy::Plus, FakePolicy::Minus, FakePolicy::Random}) {
    if (s == name(f)) return f;
  }
  throw std::invalid_argument("unknown fake state '" + std::string(s) + "' (expected 0, 1, +, - or random)");
}

inline BasisPolicy parse_basis_policy(std::string_view s) {
  if (s == "Z" || s == "z") return BasisPolicy::Z;
  if (s == "X" || s == "x") return BasisPolicy::X;
  if (s == "random") return BasisPolicy::Random;
  throw std::invalid_argument("unknown basis '" + std::string(s) + "' (expected Z, X or random)");
}

inline BasisKind draw_basis(BasisPolicy p, Rng& rng) {
  switch (p) {
    case BasisPolicy::Z: return BasisKind::Z;
    case BasisPolicy::X: return BasisKind::X;
    case BasisPolicy::Random: return random_check_basis(rng);
  }
  return BasisKind::Z;
}

struct AttackConfig {
  Target target = Target::SC;
  Strategy strategy = Strategy::None;
  FakePolicy fake = FakePolicy::Random;  // intercept-resend
  BasisPolicy basis = BasisPolicy::Random;  // measure-resend
  double alpha = 1.0;  // entangle-measure, real and >= 0
  double beta = 0.0;

  static AttackConfig entangle(Target target, double beta2) {
    if (!(beta2 >= 0.0 && beta2 <= 1.0)) throw std::invalid_argument("beta^2 must lie in [0, 1]");
    AttackConfig c;
    c.target = target;
    c.strategy = Strategy::EntangleMeasure;
    c.beta = std::sqrt(beta2);
    c.alpha = std::sqrt(1.0 - beta2);
    return c;
  }

  void validate() const {
    if (!(alpha >= 0.0) || !(beta >= 0.0) || std::abs(alpha * alpha + beta * beta - 1.0) > kAmpTol) {
      throw std::invalid_argument("entangle attack needs real alpha, beta >= 0 with alpha^2 + beta^2 = 1");
    }
  }
};

/// Eve's probe unitary on (target, ancilla): a real rotation of the target
/// followed by CNOT onto the ancilla. With the ancilla in |0>,
/// |0>|0> -> alpha|0>|0> + beta|1>|1> and |1>|0> -> alpha|1>|1> - beta|0>|0>.
inline Mat4 eve_unitary(double alpha, double beta) {
  // Row/column index = (target bit << 1) | ancilla bit.
  const Mat2 rot = {Amp{alpha}, Amp{-beta}, Amp{beta}, Amp{alpha}};
  Mat4 rot_i{};
  for (std::size_t t = 0; t < 2; ++t) {
    for (std::size_t u = 0; u < 2; ++u) {
      for (std::size_t e = 0; e < 2; ++e) rot_i[((t << 1) | e) * 4 + ((u << 1) | e)] = rot[t * 2 + u];
    }
  }
  Mat4 out{};
  for (std::size_t r = 0; r < 4; ++r) {
    const std::size_t src = (r & 2) ? (r ^ 1) : r;  // CNOT: flip the ancilla when the target is 1
    for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] = rot_i[src * 4 + c];
  }
  return out;
}

/// Eve keeps the genuine particle and sends a fresh one in its place.
inline ParticleId attack_intercept_resend(Lab& lab, ParticleId /*genuine*/, const AttackConfig& cfg, Rng& rng) {
  DecoyState fake{};
  switch (cfg.fake) {
    case FakePolicy::Zero: fake = DecoyState::Zero; break;
    case FakePolicy::One: fake = DecoyState::One; break;
    case FakePolicy::Plus: fake = DecoyState::Plus; break;
    case FakePolicy::Minus: fake = DecoyState::Minus; break;
    case FakePolicy::Random: fake = random_decoy_state(rng); break;
  }
  return lab.add_qubit(decoy_state(fake));
}

/// Eve measures the particle and forwards it in the collapsed state.
inline ParticleId attack_measure_resend(Lab& lab, ParticleId p, const AttackConfig& cfg, Rng& rng) {
  lab.measure({p}, draw_basis(cfg.basis, rng), rng);
  return p;
}

/// Eve couples a fresh ancilla to the particle and forwards the particle.
inline ParticleId attack_entangle_measure(Lab& lab, ParticleId p, const AttackConfig& cfg, Rng& /*rng*/) {
  cfg.validate();
  const ParticleId ancilla = lab.add_ancilla(p);
  lab.apply(p, ancilla, eve_unitary(cfg.alpha, cfg.beta));
  return p;
}

/// Returns the particle that arrives at Bob.
inline ParticleId apply_attack(Lab& lab, ParticleId p, const AttackConfig& cfg, Rng& rng) {
  switch (cfg.strategy) {
    case Strategy::None: return p;
    case Strategy::InterceptResend: return attack_intercept_resend(lab, p, cfg, rng);
    case Strategy::MeasureResend: return attack_measure_resend(lab, p, cfg, rng);
    case Strategy::EntangleMeasure: return attack_entangle_measure(lab, p, cfg, rng);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Detection harness

enum class CheckKind : std::uint8_t { GhzSample, SingleDecoy };

/// One check sample under attack. For GHZ samples `basis` is Bob's
/// measurement basis; for single decoys it restricts the preparation basis
/// (Random = uniform over |0>, |1>, |+>, |->).
struct CheckTemplate {
  CheckKind kind = CheckKind::GhzSample;
  GhzLabel sample_label{0};
  BasisPolicy basis = BasisPolicy::Random;

  static CheckTemplate for_target(Target t, BasisPolicy basis = BasisPolicy::Random) {
    return {t == Target::SC ? CheckKind::GhzSample : CheckKind::SingleDecoy, GhzLabel(0), basis};
  }
};

struct DetectionEstimate {
  std::size_t trials = 0;
  std::size_t detections = 0;
  double rate = 0.0;
  double per_decoy_rate = 0.0;  // each trial uses exactly one check sample
  double ci95 = 0.0;            // 1.96 * sqrt(rate (1 - rate) / trials)
};

/// Runs one check sample with Eve on its transmission; true if flagged.
inline bool run_detection_trial(const AttackConfig& attack, const CheckTemplate& tmpl, Rng& rng) {
  Lab lab;
  if (tmpl.kind == CheckKind::GhzSample) {
    const std::vector<ParticleId> abc = lab.add(ghz_state(tmpl.sample_label));
    const ParticleId delivered = apply_attack(lab, abc[2], attack, rng);
    const BasisKind basis = draw_basis(tmpl.basis, rng);
    return check_ghz_sample(lab, abc[0], abc[1], delivered, tmpl.sample_label, basis, rng).error;
  }
  DecoyState prepared{};
  switch (tmpl.basis) {
    case BasisPolicy::Z: prepared = rng.coin() ? DecoyState::One : DecoyState::Zero; break;
    case BasisPolicy::X: prepared = rng.coin() ? DecoyState::Minus : DecoyState::Plus; break;
    case BasisPolicy::Random: prepared = random_decoy_state(rng); break;
  }
  const ParticleId sent = lab.add_qubit(decoy_state(prepared));
  const ParticleId delivered = apply_attack(lab, sent, attack, rng);
  return check_single_decoy(lab, delivered, prepared, rng).error;
}

/// Trial t draws from Rng(seed, t), so the estimate does not depend on the
/// thread count.
inline DetectionEstimate estimate_detection(const AttackConfig& attack, const CheckTemplate& tmpl,
                                            std::size_t trials, std::uint64_t seed, unsigned threads = 1) {
  if (trials == 0) throw std::invalid_argument("estimate_detection: trials must be >= 1");
  if (attack.strategy == Strategy::EntangleMeasure) attack.validate();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));

  std::vector<std::size_t> counts(threads, 0);
  auto work = [&](unsigned w) {
    const std::size_t begin = trials * w / threads;
    const std::size_t end = trials * (w + 1) / threads;
    std::size_t hits = 0;
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng(seed, t);
      hits += run_detection_trial(attack, tmpl, rng) ? 1 : 0;
    }
    counts[w] = hits;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  DetectionEstimate e;
  e.trials = trials;
  for (std::size_t c : counts) e.detections += c;
  e.rate = static_cast<double>(e.detections) / static_cast<double>(trials);
  e.per_decoy_rate = e.rate;
  e.ci95 = 1.96 * std::sqrt(e.rate * (1.0 - e.rate) / static_cast<double>(trials));
  return e;
}

/// Detection probabilities as quoted in the protocol's security analysis,
/// where one is quoted for this attack/check combination.
inline std::optional<double> reference_detection_rate(const AttackConfig& attack, const CheckTemplate& tmpl) {
  auto average = [&](double z, double x) -> double {
    switch (tmpl.basis) {
      case BasisPolicy::Z: return z;
      case BasisPolicy::X: return x;
      case BasisPolicy::Random: return 0.5 * (z + x);
    }
    return z;
  };
  switch (attack.strategy) {
    case Strategy::None: return 0.0;
    case Strategy::EntangleMeasure:
      if (tmpl.basis == BasisPolicy::Z) return attack.beta * attack.beta;
      return std::nullopt;
    default: break;
  }

  if (tmpl.kind == CheckKind::GhzSample) {
    if (attack.strategy == Strategy::InterceptResend) {
      auto per_fake = [&](FakePolicy f) {
        const bool diagonal = f == FakePolicy::Plus || f == FakePolicy::Minus;
        return average(diagonal ? 0.75 : 0.5, 0.5);
      };
      if (attack.fake == FakePolicy::Random) {
        return 0.25 * (per_fake(FakePolicy::Zero) + per_fake(FakePolicy::One) + per_fake(FakePolicy::Plus) +
                       per_fake(FakePolicy::Minus));
      }
      return per_fake(attack.fake);
    }
    // Measure-resend: Eve in Z -> errors only on Bob's X checks (50%);
    // Eve in X -> errors only on Bob's Z checks (75%).
    const double eve_z = average(0.0, 0.5);
    const double eve_x = average(0.75, 0.0);
    switch (attack.basis) {
      case BasisPolicy::Z: return eve_z;
      case BasisPolicy::X: return eve_x;
      case BasisPolicy::Random: return 0.5 * (eve_z + eve_x);
    }
    return std::nullopt;
  }

  if (tmpl.basis != BasisPolicy::Random) return std::nullopt;
  if (attack.strategy == Strategy::InterceptResend && attack.fake == FakePolicy::Random) return 0.5;
  if (attack.strategy == Strategy::MeasureResend && attack.basis == BasisPolicy::Random) return 0.25;
  return std::nullopt;
}

}  // namespace bqsdc
