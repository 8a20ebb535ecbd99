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

// One bidirectional session: preparation, three eavesdropping checks, both
// encodings, entanglement swapping, the public announcement and decoding.
//
// Particle sequences hold Lab handles. Data particle 2n-2 of each sequence
// belongs to the odd triple of group n, data particle 2n-1 to the even
// triple. A transmission may replace handles (intercept-resend), so
// sequences are the source of truth for which particle arrived.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqsdc/adversary.hpp"
#include "bqsdc/checks.hpp"
#include "bqsdc/codebook.hpp"
#include "bqsdc/lab.hpp"
#include "bqsdc/swap.hpp"

namespace bqsdc {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Alice knows her prepared label and her own op; recovers Bob's op.
inline OpLabel decode_as_alice(GhzLabel prepared, OpLabel own, CollectionLabel announced) {
  const GhzLabel odd = transform_label(prepared, own);
  for (GhzLabel even : GhzLabel::all()) {
    if (collection_table(odd, even) == announced) return invert_transform(prepared, even);
  }
  throw DecodeError("announcement " + announced.str() + " is inconsistent with " + odd.str());
}

/// Bob knows the label he measured and his own op; recovers Alice's op.
inline OpLabel decode_as_bob(GhzLabel measured, OpLabel own, CollectionLabel announced) {
  const GhzLabel even = transform_label(measured, own);
  for (GhzLabel odd : GhzLabel::all()) {
    if (collection_table(odd, even) == announced) return invert_transform(measured, odd);
  }
  throw DecodeError("announcement " + announced.str() + " is inconsistent with " + even.str());
}

/// The announcement a noiseless group produces for initial label p and ops (a, b).
inline CollectionLabel expected_announcement(GhzLabel p, OpLabel a, OpLabel b) {
  return collection_table(transform_label(p, a), transform_label(p, b));
}

struct SessionConfig {
  std::size_t groups = 1;  // N; each side sends 3N bits
  std::optional<std::size_t> decoys_step1;
  std::optional<std::size_t> decoys_step3;
  std::optional<std::size_t> decoys_step5;
  std::uint64_t seed = 0;
  std::optional<AttackConfig> attack;
  double check_threshold = 0.0;      // abort when a check's error rate exceeds this
  std::optional<GhzLabel> initial;   // forces every prepared label

  /// 16 per check up to N = 16, N per check beyond.
  std::size_t default_decoys() const noexcept { return groups <= 16 ? 16 : groups; }
  std::size_t step1_decoys() const noexcept { return decoys_step1.value_or(default_decoys()); }
  std::size_t step3_decoys() const noexcept { return decoys_step3.value_or(default_decoys()); }
  std::size_t step5_decoys() const noexcept { return decoys_step5.value_or(default_decoys()); }

  void validate() const {
    if (groups < 1) throw std::invalid_argument("session needs N >= 1");
    if (!(check_threshold >= 0.0 && check_threshold < 1.0)) {
      throw std::invalid_argument("check threshold must lie in [0, 1)");
    }
    if (attack && attack->strategy == Strategy::EntangleMeasure) attack->validate();
  }
};

struct SequenceEntry {
  ParticleId particle;
  bool decoy = false;
  std::size_t decoy_slot = 0;  // index into the step's decoy records
};

using ParticleSequence = std::vector<SequenceEntry>;

inline std::vector<ParticleId> data_particles(const ParticleSequence& seq) {
  std::vector<ParticleId> out;
  for (const auto& e : seq) {
    if (!e.decoy) out.push_back(e.particle);
  }
  return out;
}

/// `count` distinct sorted positions drawn uniformly from [0, total).
inline std::vector<std::size_t> random_positions(std::size_t total, std::size_t count, Rng& rng) {
  if (count > total) throw std::invalid_argument("random_positions: count exceeds total");
  std::vector<std::size_t> idx(total);
  for (std::size_t i = 0; i < total; ++i) idx[i] = i;
  for (std::size_t i = 0; i < count; ++i) std::swap(idx[i], idx[i + rng.below(total - i)]);
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Interleaves `data` with decoys at `positions` (positions index the result).
inline ParticleSequence insert_decoys(std::span<const ParticleId> data, std::span<const ParticleId> decoys,
                                      std::span<const std::size_t> positions) {
  ParticleSequence out;
  out.reserve(data.size() + decoys.size());
  std::size_t d = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < data.size() + decoys.size(); ++i) {
    if (k < positions.size() && positions[k] == i) {
      out.push_back({decoys[k], true, k});
      ++k;
    } else {
      out.push_back({data[d++], false, 0});
    }
  }
  return out;
}

struct SampleRecord {
  std::size_t position;
  GhzLabel label;
  BasisKind basis;
  std::array<std::size_t, 3> bits;
  bool error;
};

struct DecoyRecord {
  std::size_t position;
  DecoyState state;
  std::size_t measured = 0;
  bool error = false;
};

struct GroupRecord {
  std::size_t n = 0;  // 1-based
  GhzLabel prepared;
  std::optional<OpLabel> a_op;
  std::optional<GhzLabel> p_label;  // Bob's GHZ-basis result on the even triple
  std::optional<OpLabel> b_op;
  std::optional<BellTriple> bell;
  std::optional<CollectionLabel> announcement;
  std::optional<MessageTriple> decoded_by_alice;  // Bob's message as Alice reads it
  std::optional<MessageTriple> decoded_by_bob;    // Alice's message as Bob reads it
};

struct SessionTranscript {
  SessionConfig config;
  std::vector<MessageTriple> alice_messages;
  std::vector<MessageTriple> bob_messages;
  std::vector<GroupRecord> groups;
  std::vector<SampleRecord> step1_samples;
  std::vector<DecoyRecord> step3_decoys;
  std::vector<DecoyRecord> step5_decoys;
  std::vector<CheckResult> checks;
  std::optional<int> abort_step;

  bool aborted() const noexcept { return abort_step.has_value(); }
};

/// Step-by-step session. Each public step must be called in protocol order.
class Session {
 public:
  // Rng stream ids under the master seed.
  enum Stream : std::uint64_t {
    kPrepare = 1, kCheck1, kAliceEncode, kCheck2, kStep5Decoys, kCheck3, kBobMeasure, kSwap,
    kAttackBase = 16, kMessages = 64,
  };

  explicit Session(SessionConfig cfg) : master_(cfg.seed, 0) {
    cfg.validate();
    t_.config = std::move(cfg);
  }

  const SessionTranscript& transcript() const noexcept { return t_; }
  Lab& lab() noexcept { return lab_; }
  const ParticleSequence& sequence_a() const noexcept { return seq_a_; }
  const ParticleSequence& sequence_b() const noexcept { return seq_b_; }
  const ParticleSequence& sequence_c() const noexcept { return seq_c_; }

  /// Step 1: prepare two identical GHZ triples per group, insert GHZ sample
  /// particles at aligned positions and send S'_C.
  void prepare() {
    expect(Phase::Fresh);
    Rng rng = master_.split(kPrepare);
    const std::size_t n_groups = t_.config.groups;
    std::vector<ParticleId> a, b, c;
    for (std::size_t n = 0; n < n_groups; ++n) {
      const GhzLabel label = t_.config.initial.value_or(GhzLabel(rng.below(8)));
      t_.groups.push_back({n + 1, label});
      for (int copy = 0; copy < 2; ++copy) {
        const auto abc = lab_.add(ghz_state(label));
        a.push_back(abc[0]);
        b.push_back(abc[1]);
        c.push_back(abc[2]);
      }
    }

    const std::size_t d = t_.config.step1_decoys();
    const std::vector<std::size_t> positions = random_positions(2 * n_groups + d, d, rng);
    std::vector<ParticleId> sa, sb, sc;
    for (std::size_t j = 0; j < d; ++j) {
      const GhzLabel label(rng.below(8));
      const auto abc = lab_.add(ghz_state(label));
      sa.push_back(abc[0]);
      sb.push_back(abc[1]);
      sc.push_back(abc[2]);
      t_.step1_samples.push_back({positions[j], label, BasisKind::Z, {}, false});
    }
    seq_a_ = insert_decoys(a, sa, positions);
    seq_b_ = insert_decoys(b, sb, positions);
    seq_c_ = insert_decoys(c, sc, positions);
    transmit(seq_c_, Target::SC);
    phase_ = Phase::Prepared;
  }

  /// Step 2: GHZ correlation check on the sample particles of S'_C.
  CheckResult check1() {
    expect(Phase::Prepared);
    Rng rng = master_.split(kCheck1);
    std::size_t errors = 0;
    for (auto& s : t_.step1_samples) {
      s.basis = random_check_basis(rng);
      const auto out = check_ghz_sample(lab_, seq_a_[s.position].particle, seq_b_[s.position].particle,
                                        seq_c_[s.position].particle, s.label, s.basis, rng);
      s.bits = out.bits;
      s.error = out.error;
      errors += out.error ? 1 : 0;
    }
    return record_check(2, t_.step1_samples.size(), errors, Phase::Checked1);
  }

  /// Step 3: U_a on A_{2n-1}, B_{2n-1}; then decoys into S_B and send S''_B.
  void alice_encode(std::span<const MessageTriple> messages) {
    expect(Phase::Checked1);
    check_length(messages);
    t_.alice_messages.assign(messages.begin(), messages.end());
    seq_a_ = strip(seq_a_);
    seq_b_ = strip(seq_b_);
    seq_c_ = strip(seq_c_);
    for (std::size_t n = 0; n < t_.groups.size(); ++n) {
      const OpLabel a = message_to_op(messages[n]);
      t_.groups[n].a_op = a;
      const CompositeOp op = composite(a);
      lab_.apply(seq_a_[2 * n].particle, op.first);
      lab_.apply(seq_b_[2 * n].particle, op.second);
    }
    Rng rng = master_.split(kAliceEncode);
    seq_b_ = with_single_decoys(seq_b_, t_.config.step3_decoys(), t_.step3_decoys, rng);
    transmit(seq_b_, Target::SB);
    phase_ = Phase::Encoded;
  }

  /// Step 4: Bob measures the decoys of S''_B in their preparation bases.
  CheckResult check2() {
    expect(Phase::Encoded);
    Rng rng = master_.split(kCheck2);
    return record_check(4, t_.step3_decoys.size(), measure_decoys(seq_b_, t_.step3_decoys, rng), Phase::Checked2);
  }

  /// Step 5: decoys into S_A, send S''_A, check them.
  CheckResult check3() {
    expect(Phase::Checked2);
    Rng prep = master_.split(kStep5Decoys);
    seq_a_ = with_single_decoys(seq_a_, t_.config.step5_decoys(), t_.step5_decoys, prep);
    transmit(seq_a_, Target::SA);
    Rng rng = master_.split(kCheck3);
    return record_check(5, t_.step5_decoys.size(), measure_decoys(seq_a_, t_.step5_decoys, rng), Phase::Checked3);
  }

  /// Step 6: GHZ-basis measurement of each even triple, a fresh copy of the
  /// measured state, and U_b on the new A_{2n}, B_{2n}.
  void bob_encode(std::span<const MessageTriple> messages) {
    expect(Phase::Checked3);
    check_length(messages);
    t_.bob_messages.assign(messages.begin(), messages.end());
    seq_a_ = strip(seq_a_);
    seq_b_ = strip(seq_b_);
    Rng rng = master_.split(kBobMeasure);
    for (std::size_t n = 0; n < t_.groups.size(); ++n) {
      const std::size_t even = 2 * n + 1;
      const GhzLabel p(lab_.measure({seq_a_[even].particle, seq_b_[even].particle, seq_c_[even].particle},
                                    BasisKind::Ghz, rng));
      const auto fresh = lab_.add(ghz_state(p));
      seq_a_[even].particle = fresh[0];
      seq_b_[even].particle = fresh[1];
      seq_c_[even].particle = fresh[2];
      const OpLabel b = message_to_op(messages[n]);
      const CompositeOp op = composite(b);
      lab_.apply(fresh[0], op.first);
      lab_.apply(fresh[1], op.second);
      t_.groups[n].p_label = p;
      t_.groups[n].b_op = b;
    }
    phase_ = Phase::BobEncoded;
  }

  /// Step 7: Bell measurements on the three cross pairs; announce C_m.
  void swap_and_announce() {
    expect(Phase::BobEncoded);
    Rng rng = master_.split(kSwap);
    for (std::size_t n = 0; n < t_.groups.size(); ++n) {
      const std::size_t odd = 2 * n;
      const std::size_t even = odd + 1;
      const auto pair = [&](const ParticleSequence& s) {
        return BellLabel::from_index(lab_.measure({s[odd].particle, s[even].particle}, BasisKind::Bell, rng));
      };
      const BellLabel a = pair(seq_a_);
      const BellLabel b = pair(seq_b_);
      const BellLabel c = pair(seq_c_);
      const BellTriple triple{a, b, c};
      t_.groups[n].bell = triple;
      t_.groups[n].announcement = collection_of(triple);
    }
    phase_ = Phase::Announced;
  }

  /// Bob's messages as Alice infers them.
  std::vector<MessageTriple> alice_decode() {
    expect_at_least_announced();
    std::vector<MessageTriple> out;
    for (auto& g : t_.groups) {
      g.decoded_by_alice = op_to_message(decode_as_alice(g.prepared, *g.a_op, *g.announcement));
      out.push_back(*g.decoded_by_alice);
    }
    return out;
  }

  /// Alice's messages as Bob infers them.
  std::vector<MessageTriple> bob_decode() {
    expect_at_least_announced();
    std::vector<MessageTriple> out;
    for (auto& g : t_.groups) {
      g.decoded_by_bob = op_to_message(decode_as_bob(*g.p_label, *g.b_op, *g.announcement));
      out.push_back(*g.decoded_by_bob);
    }
    return out;
  }

  SessionTranscript take_transcript() && { return std::move(t_); }

 private:
  enum class Phase { Fresh, Prepared, Checked1, Encoded, Checked2, Checked3, BobEncoded, Announced, Aborted };

  void expect(Phase p) const {
    if (phase_ != p) throw std::logic_error("Session: protocol step called out of order");
  }
  void expect_at_least_announced() const { expect(Phase::Announced); }

  void check_length(std::span<const MessageTriple> messages) const {
    if (messages.size() != t_.groups.size()) {
      throw std::invalid_argument("expected " + std::to_string(3 * t_.groups.size()) + " message bits, got " +
                                  std::to_string(3 * messages.size()));
    }
  }

  CheckResult record_check(int step, std::size_t samples, std::size_t errors, Phase next) {
    const CheckResult r = summarize_check(step, samples, errors, t_.config.check_threshold);
    t_.checks.push_back(r);
    if (r.aborted) {
      t_.abort_step = step;
      phase_ = Phase::Aborted;
    } else {
      phase_ = next;
    }
    return r;
  }

  static ParticleSequence strip(const ParticleSequence& seq) {
    ParticleSequence out;
    for (const auto& e : seq) {
      if (!e.decoy) out.push_back(e);
    }
    return out;
  }

  ParticleSequence with_single_decoys(const ParticleSequence& seq, std::size_t count, std::vector<DecoyRecord>& records,
                                      Rng& rng) {
    const std::vector<ParticleId> data = data_particles(seq);
    const std::vector<std::size_t> positions = random_positions(data.size() + count, count, rng);
    std::vector<ParticleId> decoys;
    for (std::size_t j = 0; j < count; ++j) {
      const DecoyState s = random_decoy_state(rng);
      decoys.push_back(lab_.add_qubit(decoy_state(s)));
      records.push_back({positions[j], s});
    }
    return insert_decoys(data, decoys, positions);
  }

  std::size_t measure_decoys(const ParticleSequence& seq, std::vector<DecoyRecord>& records, Rng& rng) {
    std::size_t errors = 0;
    for (auto& r : records) {
      const auto out = check_single_decoy(lab_, seq[r.position].particle, r.state, rng);
      r.measured = out.measured;
      r.error = out.error;
      errors += out.error ? 1 : 0;
    }
    return errors;
  }

  void transmit(ParticleSequence& seq, Target target) {
    const auto& attack = t_.config.attack;
    if (!attack || attack->target != target || attack->strategy == Strategy::None) return;
    Rng rng = master_.split(kAttackBase + static_cast<std::uint64_t>(target));
    for (auto& e : seq) e.particle = apply_attack(lab_, e.particle, *attack, rng);
  }

  Rng master_;
  Lab lab_;
  SessionTranscript t_;
  ParticleSequence seq_a_, seq_b_, seq_c_;
  Phase phase_ = Phase::Fresh;
};

/// Uniformly random messages drawn from the session's message stream.
inline std::vector<MessageTriple> random_messages(std::size_t groups, Rng& rng) {
  std::vector<MessageTriple> out;
  out.reserve(groups);
  for (std::size_t i = 0; i < groups; ++i) out.emplace_back(rng.below(8));
  return out;
}

/// Runs steps 1-7 in order. On a failed check the transcript records the
/// aborting step and nothing is decoded.
inline SessionTranscript run_session(const SessionConfig& cfg, std::span<const MessageTriple> alice,
                                     std::span<const MessageTriple> bob) {
  Session s(cfg);
  if (alice.size() != cfg.groups || bob.size() != cfg.groups) {
    throw std::invalid_argument("message lengths must be 3N bits on both sides");
  }
  s.prepare();
  if (s.check1().aborted) return std::move(s).take_transcript();
  s.alice_encode(alice);
  if (s.check2().aborted) return std::move(s).take_transcript();
  if (s.check3().aborted) return std::move(s).take_transcript();
  s.bob_encode(bob);
  s.swap_and_announce();
  s.alice_decode();
  s.bob_decode();
  return std::move(s).take_transcript();
}

}  // namespace bqsdc
