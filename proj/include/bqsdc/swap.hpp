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

// Entanglement swapping between two GHZ triples: Bell measurements on the
// cross pairs (A1A2), (B1B2), (C1C2) of |Psi_g1>_{A1B1C1} (x) |Psi_g2>_{A2B2C2}.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bqsdc/codebook.hpp"
#include "bqsdc/labels.hpp"
#include "bqsdc/qcore.hpp"
#include "bqsdc/reference_tables.hpp"

namespace bqsdc {

struct BellTriple {
  BellLabel a;  // A1A2
  BellLabel b;  // B1B2
  BellLabel c;  // C1C2

  /// Lexicographic in (a.flip, a.minus, b.flip, b.minus, c.flip, c.minus).
  constexpr std::size_t index() const noexcept { return a.index() * 16 + b.index() * 4 + c.index(); }
  static constexpr BellTriple from_index(std::size_t i) {
    if (i >= 64) throw std::out_of_range("Bell triple index out of range");
    return {BellLabel::from_index(i / 16), BellLabel::from_index((i / 4) % 4), BellLabel::from_index(i % 4)};
  }
  constexpr auto operator<=>(const BellTriple&) const = default;

  std::string str() const { return a.str() + " " + b.str() + " " + c.str(); }
};

inline constexpr std::size_t kBellTripleCount = 64;

/// Six-qubit layout used for swapping: A1 B1 C1 A2 B2 C2.
inline const std::vector<MeasurementSpec>& cross_pair_measurements() {
  static const std::vector<MeasurementSpec> specs = {
      {BasisKind::Bell, {0, 3}}, {BasisKind::Bell, {1, 4}}, {BasisKind::Bell, {2, 5}}};
  return specs;
}

struct SwapDistribution {
  std::array<double, kBellTripleCount> probability{};

  /// Triples with nonzero probability, in index order.
  std::vector<BellTriple> support() const {
    std::vector<BellTriple> out;
    for (std::size_t i = 0; i < kBellTripleCount; ++i) {
      if (probability[i] > kZeroProbTol) out.push_back(BellTriple::from_index(i));
    }
    return out;
  }

  double total() const {
    double t = 0.0;
    for (double p : probability) t += p;
    return t;
  }
};

/// Exact joint Bell-outcome distribution, from the Born rule.
inline SwapDistribution swap_distribution(GhzLabel g1, GhzLabel g2) {
  const StateVector joint = tensor(ghz_state(g1), ghz_state(g2));
  const std::vector<double> probs = joint_distribution(joint, cross_pair_measurements());
  SwapDistribution d;
  std::copy(probs.begin(), probs.end(), d.probability.begin());
  return d;
}

/// C_m is the support of swapping |Psi_0> with |Psi_m>; every other pair is
/// classified against those eight sets.
class CollectionIndex {
 public:
  static const CollectionIndex& instance() {
    static const CollectionIndex index;
    return index;
  }

  const std::vector<BellTriple>& members(CollectionLabel m) const { return members_[m.value()]; }
  std::optional<CollectionLabel> owner(const BellTriple& t) const { return owner_[t.index()]; }
  std::optional<CollectionLabel> table(GhzLabel g1, GhzLabel g2) const { return table_[g1.value()][g2.value()]; }
  bool is_partition() const noexcept { return partition_; }

 private:
  CollectionIndex() {
    for (CollectionLabel m : CollectionLabel::all()) {
      members_[m.value()] = swap_distribution(GhzLabel(0), GhzLabel(m.value())).support();
      for (const BellTriple& t : members_[m.value()]) {
        if (owner_[t.index()]) partition_ = false;
        owner_[t.index()] = m;
      }
    }
    for (const auto& o : owner_) partition_ = partition_ && o.has_value();

    for (GhzLabel g1 : GhzLabel::all()) {
      for (GhzLabel g2 : GhzLabel::all()) {
        const std::vector<BellTriple> support = swap_distribution(g1, g2).support();
        for (CollectionLabel m : CollectionLabel::all()) {
          if (support == members_[m.value()]) table_[g1.value()][g2.value()] = m;
        }
      }
    }
  }

  std::array<std::vector<BellTriple>, 8> members_;
  std::array<std::optional<CollectionLabel>, kBellTripleCount> owner_;
  std::array<std::array<std::optional<CollectionLabel>, 8>, 8> table_;
  bool partition_ = true;
};

inline CollectionLabel collection_of(const BellTriple& t) {
  const auto m = CollectionIndex::instance().owner(t);
  if (!m) throw std::logic_error("collection_of: triple belongs to no collection");
  return *m;
}

inline CollectionLabel collection_table(GhzLabel g1, GhzLabel g2) {
  const auto m = CollectionIndex::instance().table(g1, g2);
  if (!m) throw std::logic_error("collection_table: swap support matches no collection");
  return *m;
}

/// Printed member set of C_m parsed into triples, sorted by index.
inline std::vector<BellTriple> reference_members(CollectionLabel m) {
  std::vector<BellTriple> out;
  for (const auto& text : reference::kCollectionMembers[m.value()]) {
    out.push_back({BellLabel::parse(text[0]), BellLabel::parse(text[1]), BellLabel::parse(text[2])});
  }
  std::sort(out.begin(), out.end(), [](const BellTriple& x, const BellTriple& y) { return x.index() < y.index(); });
  return out;
}

struct Table2Row {
  GhzLabel g1;
  GhzLabel g2;
  CollectionLabel expected;               // printed table
  std::optional<CollectionLabel> got;     // oracle
  std::vector<BellTriple> support;
  double max_deviation = 0.0;             // max |p - 1/8| over the support
  bool match = false;
};

struct Table2Report {
  std::vector<Table2Row> rows;
  std::size_t mismatches = 0;
  std::size_t member_sets_matching = 0;  // out of 8, against the printed sets
  bool partition = false;
  bool symmetric = true;
  double max_deviation = 0.0;
  bool ok() const noexcept { return mismatches == 0 && member_sets_matching == 8 && partition && symmetric; }
};

/// Every supported probability must be 1/8 within this bound.
inline constexpr double kSwapProbTol = 1e-9;

inline Table2Report verify_table2() {
  const CollectionIndex& index = CollectionIndex::instance();
  Table2Report report;
  report.partition = index.is_partition();
  for (CollectionLabel m : CollectionLabel::all()) {
    if (index.members(m) == reference_members(m)) ++report.member_sets_matching;
  }

  for (GhzLabel g1 : GhzLabel::all()) {
    for (GhzLabel g2 : GhzLabel::all()) {
      Table2Row row{g1, g2, CollectionLabel(reference::kCollectionTable[g1.value()][g2.value()]), std::nullopt};
      const SwapDistribution d = swap_distribution(g1, g2);
      row.support = d.support();
      for (const BellTriple& t : row.support) {
        row.max_deviation = std::max(row.max_deviation, std::abs(d.probability[t.index()] - 0.125));
      }
      for (CollectionLabel m : CollectionLabel::all()) {
        if (row.support == reference_members(m)) row.got = m;
      }
      row.match = row.got && *row.got == row.expected && row.support.size() == 8 &&
                  row.max_deviation <= kSwapProbTol && index.table(g1, g2) == row.got;
      if (!row.match) ++report.mismatches;
      report.max_deviation = std::max(report.max_deviation, row.max_deviation);
      report.symmetric = report.symmetric && index.table(g1, g2) == index.table(g2, g1);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace bqsdc
