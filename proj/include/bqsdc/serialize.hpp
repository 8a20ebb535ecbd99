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

// JSON and CSV renderings of reports and transcripts. JSON objects keep
// insertion order so output is byte-stable for a given input.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqsdc/adversary.hpp"
#include "bqsdc/analysis.hpp"
#include "bqsdc/codebook.hpp"
#include "bqsdc/protocol.hpp"
#include "bqsdc/swap.hpp"

namespace bqsdc {

using Json = nlohmann::ordered_json;

namespace detail {

template <class T>
Json optional_str(const std::optional<T>& v) {
  return v ? Json(v->str()) : Json(nullptr);
}

inline Json phase_json(Amp phase) {
  if (std::abs(phase.imag()) < kAmpTol) return phase.real();
  return Json::array({phase.real(), phase.imag()});
}

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace detail

inline Json to_json(const Table1Report& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"initial", e.initial.str()},
                       {"op", e.op.str()},
                       {"expected", e.expected.str()},
                       {"got", detail::optional_str(e.got)},
                       {"phase", detail::phase_json(e.phase)}});
  }
  return {{"entries", entries},
          {"checked", r.entries.size()},
          {"mismatches", r.mismatches},
          {"rows_are_permutations", r.rows_are_permutations},
          {"phases_are_signs", r.phases_are_signs},
          {"xor_closed_form", r.xor_closed_form}};
}

inline Json to_json(const Table2Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json support = Json::array();
    for (const auto& t : row.support) support.push_back(t.str());
    rows.push_back({{"g1", row.g1.str()},
                    {"g2", row.g2.str()},
                    {"expected", row.expected.str()},
                    {"collection", detail::optional_str(row.got)},
                    {"support", support},
                    {"max_deviation", row.max_deviation}});
  }
  return {{"rows", rows},
          {"checked", r.rows.size()},
          {"mismatches", r.mismatches},
          {"member_sets_matching", r.member_sets_matching},
          {"partition", r.partition},
          {"symmetric", r.symmetric},
          {"max_deviation", r.max_deviation}};
}

/// One row per (g1, g2): g1,g2,collection,support,max_prob_deviation.
inline std::string table2_csv(const Table2Report& r) {
  std::ostringstream out;
  out << "g1,g2,collection,support,max_prob_deviation\n";
  for (const auto& row : r.rows) {
    out << row.g1.str() << ',' << row.g2.str() << ',' << (row.got ? row.got->str() : "none") << ',';
    for (std::size_t i = 0; i < row.support.size(); ++i) out << (i ? ";" : "") << row.support[i].str();
    out << ',' << row.max_deviation << '\n';
  }
  return out.str();
}

inline Json to_json(const AttackConfig& a) {
  Json j = {{"target", std::string(name(a.target))}, {"strategy", std::string(name(a.strategy))}};
  switch (a.strategy) {
    case Strategy::InterceptResend: j["fake"] = std::string(name(a.fake)); break;
    case Strategy::MeasureResend: j["basis"] = std::string(name(a.basis)); break;
    case Strategy::EntangleMeasure:
      j["alpha"] = a.alpha;
      j["beta"] = a.beta;
      break;
    case Strategy::None: break;
  }
  return j;
}

inline Json to_json(const SessionConfig& c) {
  return {{"N", c.groups},
          {"decoys_step1", c.step1_decoys()},
          {"decoys_step3", c.step3_decoys()},
          {"decoys_step5", c.step5_decoys()},
          {"seed", c.seed},
          {"check_threshold", c.check_threshold},
          {"initial", detail::optional_str(c.initial)},
          {"attack", c.attack ? to_json(*c.attack) : Json(nullptr)}};
}

inline Json to_json(const CheckResult& r) {
  return {{"step", r.step},
          {"samples", r.samples},
          {"errors", r.errors},
          {"error_rate", r.error_rate},
          {"aborted", r.aborted}};
}

inline Json to_json(const SessionTranscript& t) {
  Json groups = Json::array();
  for (const auto& g : t.groups) {
    groups.push_back({{"n", g.n},
                      {"prepared_label", g.prepared.str()},
                      {"a_op", detail::optional_str(g.a_op)},
                      {"p_label", detail::optional_str(g.p_label)},
                      {"b_op", detail::optional_str(g.b_op)},
                      {"bell_triple", detail::optional_str(g.bell)},
                      {"announcement", detail::optional_str(g.announcement)},
                      {"decoded_by_alice", detail::optional_str(g.decoded_by_alice)},
                      {"decoded_by_bob", detail::optional_str(g.decoded_by_bob)}});
  }
  Json checks = Json::array();
  for (const auto& c : t.checks) checks.push_back(to_json(c));
  return {{"config", to_json(t.config)},
          {"groups", groups},
          {"checks", checks},
          {"abort", t.abort_step ? Json(*t.abort_step) : Json(nullptr)}};
}

struct DetectionRecord {
  AttackConfig attack;
  CheckTemplate check;
  DetectionEstimate estimate;
  std::optional<double> reference;
};

inline Json params_json(const DetectionRecord& d) {
  Json p = to_json(d.attack);
  p.erase("target");
  p.erase("strategy");
  p["check"] = d.check.kind == CheckKind::GhzSample ? "ghz_sample" : "single_decoy";
  p["check_basis"] = std::string(name(d.check.basis));
  if (d.check.kind == CheckKind::GhzSample) p["sample_label"] = d.check.sample_label.str();
  return p;
}

inline Json to_json(const DetectionRecord& d) {
  return {{"strategy", std::string(name(d.attack.strategy))},
          {"target", std::string(name(d.attack.target))},
          {"params", params_json(d)},
          {"trials", d.estimate.trials},
          {"detections", d.estimate.detections},
          {"rate", d.estimate.rate},
          {"per_decoy_rate", d.estimate.per_decoy_rate},
          {"ci95", d.estimate.ci95},
          {"reference_value", d.reference ? Json(*d.reference) : Json(nullptr)},
          {"abs_error", d.reference ? Json(std::abs(d.estimate.rate - *d.reference)) : Json(nullptr)}};
}

inline std::string detection_csv(const std::vector<DetectionRecord>& rows) {
  std::ostringstream out;
  out << "strategy,target,params,trials,rate,ci95,reference_value,abs_error\n";
  for (const auto& d : rows) {
    out << name(d.attack.strategy) << ',' << name(d.attack.target) << ',';
    bool first = true;
    const Json params = params_json(d);
    for (const auto& [k, v] : params.items()) {
      out << (first ? "" : ";") << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    out << ',' << d.estimate.trials << ',' << d.estimate.rate << ',' << d.estimate.ci95 << ',';
    if (d.reference) {
      out << *d.reference << ',' << std::abs(d.estimate.rate - *d.reference);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

inline Json to_json(const LeakageReport& r) {
  return {{"as_computed",
           {{"entropy_bits", r.entropy_bits},
            {"conditional_entropy_bits", r.conditional_entropy_bits},
            {"mutual_information_bits", r.mutual_information_bits}}},
          {"as_claimed", {{"entropy_bits", r.reference_entropy_bits}, {"claimed_leakage_bits", r.claimed_leakage_bits}}},
          {"discrepancy", r.discrepancy}};
}

inline Json to_json(const ComparisonRow& row) {
  const auto eta = row.efficiency();
  return {{"protocol", row.protocol},
          {"refs", row.refs},
          {"bits_per_round", row.bits_per_round},
          {"bits_leaked", row.bits_leaked},
          {"leakage_claimed", row.leakage_claimed},
          {"efficiency", eta ? Json(*eta) : Json(nullptr)},
          {"efficiency_percent", eta ? Json(detail::fixed(100.0 * *eta, 1) + "%") : Json(nullptr)}};
}

inline std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "protocol,refs,bits_per_round,bits_leaked,leakage_claimed,efficiency\n";
  for (const auto& row : rows) {
    out << '"' << row.protocol << "\",";
    for (std::size_t i = 0; i < row.refs.size(); ++i) out << (i ? ";" : "") << row.refs[i];
    out << ',' << row.bits_per_round << ',' << row.bits_leaked << ',' << (row.leakage_claimed ? "true" : "false")
        << ',';
    if (const auto eta = row.efficiency()) out << detail::fixed(*eta, 4);
    out << '\n';
  }
  return out.str();
}

}  // namespace bqsdc
