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

// A collection of independent quantum systems with stable particle handles.
//
// Particles prepared together (a GHZ triple, a decoy) share one StateVector.
// Operations that span two systems merge them first, so entanglement created
// later (Eve's ancilla, a Bell measurement across two triples) is tracked
// exactly. Measured particles stay inside their system.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bqsdc/qcore.hpp"

namespace bqsdc {

struct ParticleId {
  std::size_t value = 0;
  auto operator<=>(const ParticleId&) const = default;
};

class Lab {
 public:
  /// Adds a new system and returns handles for its qubits in order.
  std::vector<ParticleId> add(StateVector s) {
    const std::size_t sys = systems_.size();
    std::vector<ParticleId> ids;
    ids.reserve(s.num_qubits());
    members_.emplace_back();
    for (std::size_t q = 0; q < s.num_qubits(); ++q) {
      ParticleId id{where_.size()};
      where_.push_back({sys, q});
      members_.back().push_back(id);
      ids.push_back(id);
    }
    systems_.emplace_back(std::move(s));
    return ids;
  }

  ParticleId add_qubit(const StateVector& single) {
    if (single.num_qubits() != 1) throw std::invalid_argument("Lab::add_qubit: expected one qubit");
    return add(single).front();
  }

  /// Appends a |0> qubit to the system that holds `host`.
  ParticleId add_ancilla(ParticleId host) {
    const std::size_t sys = location(host).system;
    StateVector& s = system_ref(sys);
    const std::size_t q = s.num_qubits();
    s = tensor(s, make_basis_state("0"));
    ParticleId id{where_.size()};
    where_.push_back({sys, q});
    members_[sys].push_back(id);
    return id;
  }

  void apply(ParticleId p, const Mat2& m) {
    const Location loc = location(p);
    StateVector& s = system_ref(loc.system);
    s = apply_matrix(s, m, loc.qubit);
  }

  void apply(ParticleId p, SingleQubitOp op) { apply(p, matrix(op)); }

  void apply(ParticleId p, ParticleId q, const Mat4& m) {
    join({p, q});
    const Location lp = location(p);
    StateVector& s = system_ref(lp.system);
    s = apply_two(s, m, lp.qubit, location(q).qubit);
  }

  std::vector<double> distribution(std::span<const ParticleId> ps, BasisKind kind) {
    join(ps);
    return born_distribution(state_of(ps.front()), kind, qubits_of(ps));
  }

  std::size_t measure(std::span<const ParticleId> ps, BasisKind kind, Rng& rng) {
    join(ps);
    const std::size_t sys = location(ps.front()).system;
    MeasureResult r = bqsdc::measure(system_ref(sys), kind, qubits_of(ps), rng);
    system_ref(sys) = std::move(r.state);
    return r.outcome;
  }

  std::size_t measure(std::initializer_list<ParticleId> ps, BasisKind kind, Rng& rng) {
    return measure(std::span<const ParticleId>(ps.begin(), ps.size()), kind, rng);
  }

  const StateVector& state_of(ParticleId p) const { return *systems_.at(location(p).system); }
  std::size_t qubit_of(ParticleId p) const { return location(p).qubit; }
  bool same_system(ParticleId a, ParticleId b) const { return location(a).system == location(b).system; }
  std::size_t particle_count() const noexcept { return where_.size(); }

  /// Merges the systems holding `ps` into one (no-op if already shared).
  void join(std::span<const ParticleId> ps) {
    if (ps.empty()) throw std::invalid_argument("Lab: no particles given");
    const std::size_t target = location(ps.front()).system;
    for (ParticleId p : ps) {
      const std::size_t sys = location(p).system;
      if (sys != target) merge(target, sys);
    }
  }

  void join(std::initializer_list<ParticleId> ps) { join(std::span<const ParticleId>(ps.begin(), ps.size())); }

 private:
  struct Location {
    std::size_t system;
    std::size_t qubit;
  };

  const Location& location(ParticleId p) const {
    if (p.value >= where_.size()) throw std::out_of_range("Lab: unknown particle");
    return where_[p.value];
  }

  StateVector& system_ref(std::size_t sys) {
    if (!systems_.at(sys)) throw std::logic_error("Lab: system was merged away");
    return *systems_[sys];
  }

  std::vector<std::size_t> qubits_of(std::span<const ParticleId> ps) const {
    std::vector<std::size_t> qs;
    qs.reserve(ps.size());
    for (ParticleId p : ps) qs.push_back(location(p).qubit);
    return qs;
  }

  void merge(std::size_t into, std::size_t from) {
    StateVector& dst = system_ref(into);
    const std::size_t offset = dst.num_qubits();
    dst = tensor(dst, system_ref(from));
    for (ParticleId id : members_[from]) {
      where_[id.value] = {into, where_[id.value].qubit + offset};
      members_[into].push_back(id);
    }
    members_[from].clear();
    systems_[from].reset();
  }

  std::vector<std::optional<StateVector>> systems_;
  std::vector<std::vector<ParticleId>> members_;
  std::vector<Location> where_;
};

}  // namespace bqsdc
