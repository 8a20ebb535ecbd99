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

#include <array>
#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "bqsdc/codebook.hpp"
#include "bqsdc/lab.hpp"
#include "bqsdc/qcore.hpp"
#include "bqsdc/rng.hpp"

namespace bqsdc {
namespace {

constexpr double kTol = 1e-9;

void expect_amp(const Amp& got, Amp want) {
  EXPECT_NEAR(got.real(), want.real(), kTol);
  EXPECT_NEAR(got.imag(), want.imag(), kTol);
}

StateVector plus() { return StateVector(1, {kInvSqrt2, kInvSqrt2}); }

std::vector<StateVector> corpus() {
  std::vector<StateVector> out;
  for (GhzLabel g : GhzLabel::all()) out.push_back(ghz_state(g));
  out.push_back(tensor(ghz_state(GhzLabel(0)), ghz_state(GhzLabel(0))));
  out.push_back(tensor(ghz_state(GhzLabel(3)), ghz_state(GhzLabel(6))));
  out.push_back(StateVector::normalized(3, {1, Amp(0, 2), -3, 0, 0.5, 0, Amp(1, -1), 4}));
  out.push_back(make_basis_state("101"));
  return out;
}

TEST(Rng, SameSeedAndStreamGiveSameDraws) {
  Rng a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, StreamsAndSeedsDiffer) {
  Rng a(42, 7), b(42, 8), c(43, 7);
  int same_b = 0, same_c = 0;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next();
    same_b += x == b.next();
    same_c += x == c.next();
  }
  EXPECT_EQ(same_b, 0);
  EXPECT_EQ(same_c, 0);
}

TEST(Rng, SplitLeavesParentUntouched) {
  Rng a(1, 2);
  const Rng child = a.split(5);
  EXPECT_EQ(a.counter(), 0u);
  Rng again = Rng(1, 2).split(5);
  Rng c = child;
  EXPECT_EQ(c.next(), again.next());
  EXPECT_NE(Rng(1, 2).split(5).next(), Rng(1, 2).split(6).next());
}

TEST(Rng, BelowAndUniformStayInRange) {
  Rng r(9, 0);
  std::array<int, 7> counts{};
  for (int i = 0; i < 70000; ++i) {
    const auto v = r.below(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  for (int c : counts) EXPECT_NEAR(c / 70000.0, 1.0 / 7, 0.01);
}

TEST(StateVectorTest, RejectsBadShapeAndNorm) {
  EXPECT_THROW(StateVector(2, {1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(StateVector(1, {1, 1}), std::invalid_argument);
  EXPECT_THROW(StateVector::normalized(1, {0, 0}), std::invalid_argument);
  EXPECT_NO_THROW(StateVector::normalized(1, {3, 4}));
  EXPECT_NEAR(StateVector::normalized(1, {3, 4})[0].real(), 0.6, kTol);
}

TEST(MakeBasisState, IndexConvention) {
  EXPECT_EQ(make_basis_state("000")[0], Amp(1));
  EXPECT_EQ(make_basis_state("1")[1], Amp(1));
  const StateVector s = make_basis_state("10");
  EXPECT_EQ(s.num_qubits(), 2u);
  EXPECT_EQ(s[2], Amp(1));
  EXPECT_EQ(s[0], Amp(0));
  EXPECT_THROW(make_basis_state(""), std::invalid_argument);
  EXPECT_THROW(make_basis_state("012"), std::invalid_argument);
}

TEST(Tensor, KroneckerOrderAndNorm) {
  const StateVector s = tensor(make_basis_state("0"), make_basis_state("1"));
  EXPECT_EQ(s[0b01], Amp(1));

  const StateVector g = ghz_state(GhzLabel(0));
  const StateVector gg = tensor(g, g);
  EXPECT_EQ(gg.num_qubits(), 6u);
  for (std::size_t i = 0; i < gg.size(); ++i) {
    const bool hit = i == 0b000000 || i == 0b000111 || i == 0b111000 || i == 0b111111;
    expect_amp(gg[i], hit ? 0.5 : 0.0);
  }
  EXPECT_NEAR(gg.norm(), 1.0, kTol);
  EXPECT_THROW(tensor(gg, ghz_state(GhzLabel(1))), std::length_error);
}

TEST(ApplySingle, PauliActions) {
  expect_amp(apply_single(make_basis_state("0"), SingleQubitOp::SX, 0)[1], 1.0);
  const StateVector y = apply_single(make_basis_state("0"), SingleQubitOp::ISY, 0);
  expect_amp(y[0], 0.0);
  expect_amp(y[1], -1.0);

  const StateVector g = ghz_state(GhzLabel(0));
  const StateVector zz = apply_single(apply_single(g, SingleQubitOp::SZ, 0), SingleQubitOp::SZ, 1);
  for (std::size_t i = 0; i < 8; ++i) expect_amp(zz[i], g[i]);

  EXPECT_THROW(apply_single(g, SingleQubitOp::SX, 3), std::out_of_range);
}

TEST(ApplySingle, PreservesNorm) {
  for (const auto& s : corpus()) {
    for (SingleQubitOp op : kSingleQubitOps) {
      for (std::size_t q = 0; q < s.num_qubits(); ++q) EXPECT_NEAR(apply_single(s, op, q).norm(), 1.0, kTol);
    }
  }
}

Mat2 mul2(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i * 2 + j] += a[i * 2 + k] * b[k * 2 + j];
  return r;
}

Mat2 adjoint(const Mat2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

void expect_mat(const Mat2& a, const Mat2& b) {
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-12);
}

TEST(SingleQubitOps, MatrixIdentities) {
  const Mat2 id = matrix(SingleQubitOp::I);
  for (SingleQubitOp op : kSingleQubitOps) {
    const Mat2 m = matrix(op);
    expect_mat(mul2(adjoint(m), m), id);
    for (const Amp& a : m) EXPECT_EQ(a.imag(), 0.0);
  }
  const Mat2 isy = matrix(SingleQubitOp::ISY);
  expect_mat(mul2(isy, isy), {-1, 0, 0, -1});
  // sx sz = -i sy
  const Mat2 xz = mul2(matrix(SingleQubitOp::SX), matrix(SingleQubitOp::SZ));
  expect_mat(xz, {-isy[0], -isy[1], -isy[2], -isy[3]});
}

TEST(Bases, OrthonormalAndComplete) {
  for (BasisKind k : {BasisKind::Z, BasisKind::X, BasisKind::Bell, BasisKind::Ghz}) {
    const auto& vs = basis_vectors(k);
    const std::size_t dim = std::size_t{1} << arity(k);
    ASSERT_EQ(vs.size(), dim) << name(k);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Amp ip = 0;
        for (std::size_t x = 0; x < dim; ++x) ip += std::conj(vs[i][x]) * vs[j][x];
        EXPECT_NEAR(std::abs(ip - Amp(i == j ? 1.0 : 0.0)), 0.0, kTol);
      }
    }
    // sum of projectors = identity
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        Amp sum = 0;
        for (const auto& v : vs) sum += v[r] * std::conj(v[c]);
        EXPECT_NEAR(std::abs(sum - Amp(r == c ? 1.0 : 0.0)), 0.0, kTol);
      }
    }
  }
}

TEST(BornDistribution, Examples) {
  const auto z = born_distribution(plus(), BasisKind::Z, {0});
  EXPECT_NEAR(z[0], 0.5, kTol);
  EXPECT_NEAR(z[1], 0.5, kTol);

  const auto g = born_distribution(ghz_state(GhzLabel(3)), BasisKind::Ghz, {0, 1, 2});
  for (std::size_t o = 0; o < 8; ++o) EXPECT_NEAR(g[o], o == 3 ? 1.0 : 0.0, kTol);

  const StateVector gg = tensor(ghz_state(GhzLabel(0)), ghz_state(GhzLabel(0)));
  const std::vector<MeasurementSpec> specs = {
      {BasisKind::Bell, {0, 3}}, {BasisKind::Bell, {1, 4}}, {BasisKind::Bell, {2, 5}}};
  const auto joint = joint_distribution(gg, specs);
  ASSERT_EQ(joint.size(), 64u);
  int support = 0;
  for (double p : joint) {
    if (p > kTol) {
      ++support;
      EXPECT_NEAR(p, 0.125, kTol);
    }
  }
  EXPECT_EQ(support, 8);
}

TEST(BornDistribution, SumsToOneOnCorpus) {
  for (const auto& s : corpus()) {
    for (BasisKind k : {BasisKind::Z, BasisKind::X, BasisKind::Bell, BasisKind::Ghz}) {
      if (arity(k) > s.num_qubits()) continue;
      std::vector<std::size_t> qs;
      for (std::size_t q = 0; q < arity(k); ++q) qs.push_back(s.num_qubits() - 1 - q);
      double total = 0;
      for (double p : born_distribution(s, k, qs)) {
        EXPECT_GE(p, -kTol);
        total += p;
      }
      EXPECT_NEAR(total, 1.0, kTol) << name(k);
    }
  }
}

TEST(BornDistribution, ArityAndTargetErrors) {
  const StateVector g = ghz_state(GhzLabel(0));
  EXPECT_THROW(born_distribution(g, BasisKind::Bell, {0}), std::invalid_argument);
  EXPECT_THROW(born_distribution(g, BasisKind::Bell, {1, 1}), std::invalid_argument);
  EXPECT_THROW(born_distribution(g, BasisKind::Z, {5}), std::out_of_range);
}

TEST(Measure, EigenstatesAreStable) {
  Rng rng(3, 0);
  for (int i = 0; i < 20; ++i) {
    const auto r = measure(make_basis_state("1"), BasisKind::Z, {0}, rng);
    EXPECT_EQ(r.outcome, 1u);
    expect_amp(r.state[1], 1.0);
    const auto g = measure(ghz_state(GhzLabel(5)), BasisKind::Ghz, {0, 1, 2}, rng);
    EXPECT_EQ(g.outcome, 5u);
    EXPECT_TRUE(equal_up_to_global_phase(g.state, ghz_state(GhzLabel(5))));
  }
}

TEST(Measure, RepeatReproducesOutcome) {
  Rng rng(4, 0);
  for (int i = 0; i < 50; ++i) {
    const auto first = measure(ghz_state(GhzLabel(6)), BasisKind::X, {1}, rng);
    const auto second = measure(first.state, BasisKind::X, {1}, rng);
    EXPECT_EQ(first.outcome, second.outcome);
  }
}

TEST(Measure, FrequenciesMatchBornWithinOnePercent) {
  const StateVector s = StateVector::normalized(2, {Amp(0.3), Amp(0, 0.5), Amp(-0.6), Amp(0.2, 0.4)});
  const auto probs = born_distribution(s, BasisKind::Bell, {0, 1});
  std::array<int, 4> counts{};
  constexpr int kTrials = 100000;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(11, t);
    ++counts[measure(s, BasisKind::Bell, {0, 1}, rng).outcome];
  }
  for (std::size_t o = 0; o < 4; ++o) EXPECT_NEAR(counts[o] / double(kTrials), probs[o], 0.01);
}

TEST(Measure, DeterministicGivenRng) {
  const StateVector s = tensor(ghz_state(GhzLabel(2)), ghz_state(GhzLabel(7)));
  std::vector<std::size_t> a, b;
  Rng r1(99, 1), r2(99, 1);
  for (int i = 0; i < 200; ++i) {
    a.push_back(measure(s, BasisKind::Bell, {0, 3}, r1).outcome);
    b.push_back(measure(s, BasisKind::Bell, {0, 3}, r2).outcome);
  }
  EXPECT_EQ(a, b);
}

TEST(GlobalPhase, Examples) {
  const StateVector g2 = ghz_state(GhzLabel(2));
  std::vector<Amp> neg(g2.amps().begin(), g2.amps().end());
  for (auto& x : neg) x = -x;
  EXPECT_TRUE(equal_up_to_global_phase(g2, StateVector(3, neg)));
  EXPECT_FALSE(equal_up_to_global_phase(g2, ghz_state(GhzLabel(3))));
  EXPECT_TRUE(equal_up_to_global_phase(apply_composite(ghz_state(GhzLabel(0)), OpLabel(2), 0, 1), g2));
  EXPECT_FALSE(equal_up_to_global_phase(g2, plus()));
}

TEST(LabTest, MergesSystemsOnJointOperations) {
  Lab lab;
  const auto ab = lab.add(bell_state(kPhiPlus));
  const ParticleId c = lab.add_qubit(make_basis_state("1"));
  EXPECT_FALSE(lab.same_system(ab[0], c));
  lab.join({ab[1], c});
  EXPECT_TRUE(lab.same_system(ab[0], c));
  EXPECT_EQ(lab.state_of(c).num_qubits(), 3u);

  Rng rng(5, 0);
  const std::size_t first = lab.measure({ab[0]}, BasisKind::Z, rng);
  EXPECT_EQ(lab.measure({ab[1]}, BasisKind::Z, rng), first);
  EXPECT_EQ(lab.measure({c}, BasisKind::Z, rng), 1u);
}

TEST(LabTest, AncillaStartsInZero) {
  Lab lab;
  const ParticleId p = lab.add_qubit(plus());
  const ParticleId e = lab.add_ancilla(p);
  EXPECT_TRUE(lab.same_system(p, e));
  const auto d = lab.distribution(std::vector<ParticleId>{e}, BasisKind::Z);
  EXPECT_NEAR(d[0], 1.0, kTol);
  EXPECT_EQ(lab.particle_count(), 2u);
}

TEST(LabTest, TwoQubitGateAcrossSystems) {
  Lab lab;
  const ParticleId a = lab.add_qubit(make_basis_state("1"));
  const ParticleId b = lab.add_qubit(make_basis_state("0"));
  Mat4 cnot{};
  cnot[0] = cnot[5] = cnot[11] = cnot[14] = 1;
  lab.apply(a, b, cnot);
  Rng rng(0, 0);
  EXPECT_EQ(lab.measure({b}, BasisKind::Z, rng), 1u);
}

}  // namespace
}  // namespace bqsdc
