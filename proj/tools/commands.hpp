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

// Subcommand bodies for the bqsdc executable. Each returns the process exit
// code: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqsdc/adversary.hpp"
#include "bqsdc/analysis.hpp"
#include "bqsdc/codebook.hpp"
#include "bqsdc/protocol.hpp"
#include "bqsdc/serialize.hpp"
#include "bqsdc/swap.hpp"
#include "bqsdc/version.hpp"

namespace bqsdc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --seed if given, else $BQSDC_SEED, else fresh entropy.
inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BQSDC_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("BQSDC_SEED must be an unsigned integer");
    }
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

inline Json header(const std::string& command, std::optional<std::uint64_t> seed) {
  Json h = {{"tool", "bqsdc"}, {"version", std::string(kVersion)}, {"command", command}};
  if (seed) h["seed"] = *seed;
  return h;
}

/// Writes to `path`, or stdout for "-".
inline void write_output(const std::string& path, const std::string& body) {
  if (path == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + path + "'");
  f << body;
}

/// Human-readable progress goes to stderr when the payload owns stdout.
inline std::ostream& log_stream(const std::string& out) { return out == "-" ? std::cerr : std::cout; }

inline void check_format(const std::string& emit, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (emit == a) return;
  }
  throw UsageError("unsupported output format '" + emit + "'");
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string emit = "json";
  std::string out = "-";
};

inline int cmd_verify(const VerifyOptions& o) {
  check_format(o.emit, {"json", "csv", "text"});
  const Table1Report t1 = verify_table1();
  const Table2Report t2 = verify_table2();
  const std::size_t passed = (t1.entries.size() - t1.mismatches) + (t2.rows.size() - t2.mismatches);

  std::ostringstream summary;
  summary << "table1: " << t1.entries.size() - t1.mismatches << "/" << t1.entries.size() << " entries match"
          << (t1.phases_are_signs ? ", phases in {+1,-1}" : ", NON-SIGN PHASE") << "\n"
          << "table2: " << t2.rows.size() - t2.mismatches << "/" << t2.rows.size() << " swap supports match"
          << ", max |p - 1/8| = " << t2.max_deviation << "\n"
          << "collection member sets: " << t2.member_sets_matching << "/8 match"
          << (t2.partition ? ", partition of 64 triples" : ", NOT A PARTITION") << "\n"
          << "total: " << passed << "/" << (t1.entries.size() + t2.rows.size()) << " checks passed\n";

  if (o.emit == "json") {
    Json j = header("verify", std::nullopt);
    j["summary"] = {{"table1_passed", t1.entries.size() - t1.mismatches},
                    {"table2_passed", t2.rows.size() - t2.mismatches},
                    {"member_sets_matching", t2.member_sets_matching},
                    {"total_passed", passed},
                    {"ok", t1.ok() && t2.ok()}};
    j["table1"] = to_json(t1);
    j["table2"] = to_json(t2);
    write_output(o.out, j.dump(2) + "\n");
    log_stream(o.out) << summary.str();
  } else if (o.emit == "csv") {
    write_output(o.out, table2_csv(t2));
    log_stream(o.out) << summary.str();
  } else {
    write_output(o.out, summary.str());
  }
  return t1.ok() && t2.ok() ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

struct AttackSpec {
  std::string spec;  // "intercept:S_C", "measure:S_B", "entangle:S_A", "none"
  std::string fake = "random";
  std::string basis = "random";
  double beta2 = 0.25;
};

inline Strategy parse_strategy_name(const std::string& s) {
  if (s == "none") return Strategy::None;
  if (s == "intercept" || s == "intercept-resend") return Strategy::InterceptResend;
  if (s == "measure" || s == "measure-resend") return Strategy::MeasureResend;
  if (s == "entangle" || s == "entangle-measure") return Strategy::EntangleMeasure;
  throw UsageError("unknown attack strategy '" + s + "'");
}

inline std::optional<AttackConfig> parse_session_attack(const AttackSpec& a) {
  if (a.spec.empty() || a.spec == "none") return std::nullopt;
  const auto colon = a.spec.find(':');
  if (colon == std::string::npos) throw UsageError("--attack expects <strategy>:<target>, e.g. intercept:S_C");
  try {
    const Strategy s = parse_strategy_name(a.spec.substr(0, colon));
    const Target t = parse_target(a.spec.substr(colon + 1));
    AttackConfig cfg;
    if (s == Strategy::EntangleMeasure) cfg = AttackConfig::entangle(t, a.beta2);
    cfg.strategy = s;
    cfg.target = t;
    cfg.fake = parse_fake_policy(a.fake);
    cfg.basis = parse_basis_policy(a.basis);
    return cfg;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct RunOptions {
  std::size_t groups = 1;
  std::string alice;
  std::string bob;
  bool random_messages = false;
  std::string initial;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> decoys;
  std::optional<std::size_t> decoys_step1;
  std::optional<std::size_t> decoys_step3;
  std::optional<std::size_t> decoys_step5;
  AttackSpec attack;
  double threshold = 0.0;
  std::string out = "-";
};

inline std::vector<MessageTriple> parse_message_bits(const std::string& bits, std::size_t groups, const char* who) {
  if (bits.size() != 3 * groups) {
    throw UsageError(std::string(who) + " message needs " + std::to_string(3 * groups) + " bits, got " +
                     std::to_string(bits.size()));
  }
  std::vector<MessageTriple> out;
  try {
    for (std::size_t n = 0; n < groups; ++n) out.push_back(MessageTriple::parse(bits.substr(3 * n, 3)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(who) + ": " + e.what());
  }
  return out;
}

inline std::string join_bits(const std::vector<MessageTriple>& m) {
  std::string s;
  for (const auto& t : m) s += t.str();
  return s;
}

inline int cmd_run(const RunOptions& o) {
  if (o.groups < 1) throw UsageError("--N must be >= 1");
  SessionConfig cfg;
  cfg.groups = o.groups;
  cfg.seed = resolve_seed(o.seed);
  cfg.decoys_step1 = o.decoys_step1 ? o.decoys_step1 : o.decoys;
  cfg.decoys_step3 = o.decoys_step3 ? o.decoys_step3 : o.decoys;
  cfg.decoys_step5 = o.decoys_step5 ? o.decoys_step5 : o.decoys;
  cfg.check_threshold = o.threshold;
  cfg.attack = parse_session_attack(o.attack);
  if (!o.initial.empty()) {
    try {
      cfg.initial = GhzLabel::parse(o.initial);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::vector<MessageTriple> alice, bob;
  if (o.random_messages) {
    if (!o.alice.empty() || !o.bob.empty()) throw UsageError("--random-messages excludes --alice/--bob");
    Rng rng = Rng(cfg.seed, 0).split(Session::kMessages);
    alice = random_messages(cfg.groups, rng);
    bob = random_messages(cfg.groups, rng);
  } else {
    alice = parse_message_bits(o.alice, cfg.groups, "alice");
    bob = parse_message_bits(o.bob, cfg.groups, "bob");
  }

  const SessionTranscript t = run_session(cfg, alice, bob);
  Json j = header("run", cfg.seed);
  j["alice_message"] = join_bits(alice);
  j["bob_message"] = join_bits(bob);
  const Json body = to_json(t);
  for (const auto& [k, v] : body.items()) j[k] = v;
  write_output(o.out, j.dump(2) + "\n");

  std::ostream& log = log_stream(o.out);
  for (const auto& c : t.checks) {
    log << "check at step " << c.step << ": " << c.errors << "/" << c.samples << " errors (rate " << c.error_rate
        << ")" << (c.aborted ? " -> abort" : "") << "\n";
  }
  if (t.aborted()) {
    log << "session aborted at step " << *t.abort_step << "\n";
  } else {
    std::vector<MessageTriple> by_alice, by_bob;
    for (const auto& g : t.groups) {
      by_alice.push_back(*g.decoded_by_alice);
      by_bob.push_back(*g.decoded_by_bob);
    }
    log << "announcements:";
    for (const auto& g : t.groups) log << " " << g.announcement->str();
    log << "\nalice decoded bob's message:  " << join_bits(by_alice) << "\n"
        << "bob decoded alice's message:  " << join_bits(by_bob) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct AttackOptions {
  std::vector<std::string> strategies = {"none"};  // e.g. "measure-resend:X", "intercept:+", "entangle"
  std::string target = "S_C";
  std::string check = "auto";  // auto | Z | X | random
  double beta2 = 0.25;
  std::string sample = "psi0";
  std::size_t trials = 100000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string emit = "json";
  std::string out = "-";
};

/// "<strategy>[:<param>]" where param is a fake state for intercept and a
/// basis for measure-resend.
inline AttackConfig parse_attack_strategy(const std::string& spec, Target target, double beta2) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : spec.substr(colon + 1);
  AttackConfig cfg;
  try {
    cfg.strategy = parse_strategy_name(head);
    switch (cfg.strategy) {
      case Strategy::InterceptResend:
        cfg.fake = parse_fake_policy(param.empty() ? "random" : param);
        break;
      case Strategy::MeasureResend:
        cfg.basis = parse_basis_policy(param.empty() ? "random" : param);
        break;
      case Strategy::EntangleMeasure:
        if (!param.empty()) throw UsageError("entangle takes --beta2, not an inline parameter");
        cfg = AttackConfig::entangle(target, beta2);
        break;
      case Strategy::None:
        if (!param.empty()) throw UsageError("'none' takes no parameter");
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.target = target;
  return cfg;
}

inline int cmd_attack(const AttackOptions& o) {
  check_format(o.emit, {"json", "csv"});
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  Target target{};
  GhzLabel sample{};
  try {
    target = parse_target(o.target);
    sample = GhzLabel::parse(o.sample);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::uint64_t seed = resolve_seed(o.seed);

  std::vector<DetectionRecord> records;
  for (const std::string& spec : o.strategies) {
    const AttackConfig attack = parse_attack_strategy(spec, target, o.beta2);
    BasisPolicy check_basis = BasisPolicy::Random;
    if (o.check == "auto") {
      check_basis = attack.strategy == Strategy::EntangleMeasure ? BasisPolicy::Z : BasisPolicy::Random;
    } else {
      try {
        check_basis = parse_basis_policy(o.check);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    CheckTemplate tmpl = CheckTemplate::for_target(target, check_basis);
    tmpl.sample_label = sample;
    const DetectionEstimate est = estimate_detection(attack, tmpl, o.trials, seed, o.threads);
    records.push_back({attack, tmpl, est, reference_detection_rate(attack, tmpl)});
  }

  if (o.emit == "json") {
    Json j = header("attack", seed);
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    j["estimates"] = arr;
    write_output(o.out, j.dump(2) + "\n");
  } else {
    write_output(o.out, detection_csv(records));
  }
  std::ostream& log = log_stream(o.out);
  for (const auto& r : records) {
    log << name(r.attack.strategy) << " on " << name(r.attack.target) << ": rate " << r.estimate.rate << " +/- "
        << r.estimate.ci95;
    if (r.reference) log << " (reference " << *r.reference << ")";
    log << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct AnalyzeOptions {
  std::string emit = "json";
  std::string out = "-";
};

inline int cmd_analyze(const AnalyzeOptions& o) {
  check_format(o.emit, {"json", "text", "csv"});
  const LeakageReport leak = leakage_report(ComboDistribution::uniform());
  const EfficiencyInputs acct = kThisProtocolAccounting;
  const double eta = cabello_efficiency(acct);
  const auto rows = comparison_report();

  if (o.emit == "csv") {
    write_output(o.out, comparison_csv(rows));
    return kExitOk;
  }
  if (o.emit == "json") {
    Json j = header("analyze", std::nullopt);
    j["leakage"] = to_json(leak);
    j["efficiency"] = {{"secret_bits", acct.secret_bits},
                       {"qubits", acct.qubits},
                       {"classical_bits", acct.classical_bits},
                       {"eta", eta},
                       {"eta_percent", detail::fixed(100.0 * eta, 1) + "%"},
                       {"bits_per_group", kBitsPerGroup},
                       {"bits_per_qubit", bits_per_qubit(acct)},
                       {"holevo_ok", bits_per_qubit(acct) <= 1.0}};
    Json cmp = Json::array();
    for (const auto& r : rows) cmp.push_back(to_json(r));
    j["comparison"] = cmp;
    write_output(o.out, j.dump(2) + "\n");
    return kExitOk;
  }

  std::ostringstream t;
  t << "Eve's uncertainty over the 64 op pairs (uniform prior)\n"
    << "  H(a,b)        as claimed  " << detail::fixed(leak.reference_entropy_bits, 4) << " bits\n"
    << "  H(a,b)        as computed  " << detail::fixed(leak.entropy_bits, 4) << " bits\n"
    << "  H(a,b | m)    as computed  " << detail::fixed(leak.conditional_entropy_bits, 4) << " bits\n"
    << "  I(a,b ; m)    as computed  " << detail::fixed(leak.mutual_information_bits, 4) << " bits"
    << " (claimed " << detail::fixed(leak.claimed_leakage_bits, 4) << ")" << (leak.discrepancy ? "  [discrepancy]" : "")
    << "\n\n"
    << "Efficiency: eta = " << acct.secret_bits << "/(" << acct.qubits << "+" << acct.classical_bits
    << ") = " << detail::fixed(100.0 * eta, 1) << "%, " << kBitsPerGroup << " bits per group\n\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-46s %-22s %5s %7s %8s\n", "protocol", "refs", "bits", "leaked", "eta");
  t << line;
  for (const auto& r : rows) {
    std::string refs;
    for (std::size_t i = 0; i < r.refs.size(); ++i) refs += (i ? "," : "") + std::to_string(r.refs[i]);
    const auto e = r.efficiency();
    std::snprintf(line, sizeof line, "%-46s %-22s %5d %6d%s %8s\n", r.protocol.c_str(), refs.c_str(),
                  r.bits_per_round, r.bits_leaked, r.leakage_claimed ? "*" : " ",
                  e ? (detail::fixed(100.0 * *e, 1) + "%").c_str() : "-");
    t << line;
  }
  t << "(* leakage as claimed, see H(a,b | m) above)\n";
  write_output(o.out, t.str());
  return kExitOk;
}

}  // namespace bqsdc::cli
