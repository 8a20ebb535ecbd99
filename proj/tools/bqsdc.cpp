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

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace bqsdc::cli;

void add_out(CLI::App* app, std::string& out) {
  app->add_option("--out,-o", out, "Output file, '-' for stdout")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bidirectional quantum secure direct communication over GHZ entanglement swapping"};
  app.set_version_flag("--version", std::string(bqsdc::kVersion));
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Recompute the operation and swap-collection tables and compare");
  v->add_option("--emit", verify.emit, "json | csv | text")->capture_default_str();
  add_out(v, verify.out);

  RunOptions run;
  auto* r = app.add_subcommand("run", "Simulate one protocol session");
  r->add_option("--N", run.groups, "Number of GHZ groups")->capture_default_str();
  r->add_option("--alice", run.alice, "Alice's message, 3N bits");
  r->add_option("--bob", run.bob, "Bob's message, 3N bits");
  r->add_flag("--random-messages", run.random_messages, "Draw both messages from the seed");
  r->add_option("--initial", run.initial, "Fix every group's label, e.g. psi3");
  r->add_option("--seed", run.seed, "Master seed (default: $BQSDC_SEED or entropy)");
  r->add_option("--decoys", run.decoys, "Decoy count for all checks");
  r->add_option("--decoys-step1", run.decoys_step1, "GHZ groups sampled in the first check");
  r->add_option("--decoys-step3", run.decoys_step3, "Decoys inserted into S_A'");
  r->add_option("--decoys-step5", run.decoys_step5, "Decoys inserted into S_B'");
  r->add_option("--attack", run.attack.spec, "<strategy>:<target>, e.g. intercept:S_C");
  r->add_option("--fake", run.attack.fake, "Intercept fake state: 0 | 1 | + | - | random")->capture_default_str();
  r->add_option("--basis", run.attack.basis, "Measure-resend basis: Z | X | random")->capture_default_str();
  r->add_option("--beta2", run.attack.beta2, "Entangle-measure |beta|^2")->capture_default_str();
  r->add_option("--threshold", run.threshold, "Abort when error rate exceeds this")->capture_default_str();
  add_out(r, run.out);

  AttackOptions attack;
  auto* a = app.add_subcommand("attack", "Estimate detection probability of an attack");
  a->add_option("--strategy", attack.strategies,
                "none | intercept[:0|1|+|-|random] | measure-resend[:Z|X|random] | entangle; repeatable")
      ->capture_default_str();
  a->add_option("--target", attack.target, "S_A | S_B | S_C")->capture_default_str();
  a->add_option("--check", attack.check, "auto | Z | X | random")->capture_default_str();
  a->add_option("--beta2", attack.beta2, "Entangle-measure |beta|^2")->capture_default_str();
  a->add_option("--sample", attack.sample, "GHZ label of sampled groups")->capture_default_str();
  a->add_option("--trials", attack.trials, "Monte Carlo trials")->capture_default_str();
  a->add_option("--seed", attack.seed, "Master seed (default: $BQSDC_SEED or entropy)");
  a->add_option("--threads", attack.threads, "Worker threads; output does not depend on it")->capture_default_str();
  a->add_option("--emit", attack.emit, "json | csv")->capture_default_str();
  add_out(a, attack.out);

  AnalyzeOptions analyze;
  auto* z = app.add_subcommand("analyze", "Leakage, efficiency and protocol comparison");
  z->add_option("--emit", analyze.emit, "json | text | csv")->capture_default_str();
  add_out(z, analyze.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*v) return cmd_verify(verify);
    if (*r) return cmd_run(run);
    if (*a) return cmd_attack(attack);
    if (*z) return cmd_analyze(analyze);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
