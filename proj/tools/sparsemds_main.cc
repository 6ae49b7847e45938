// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: construct, check, instantiate, encode, decode and
// simulate. Exit status: 0 success, 1 domain failure, 2 usage or parse error.
// Row, column and position indices are printed 1-based.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparsemds/balancer.h"
#include "sparsemds/combinatorics.h"
#include "sparsemds/errors.h"
#include "sparsemds/mds_codec.h"
#include "sparsemds/sensor_sim.h"
#include "sparsemds/support_matrix.h"

namespace {

using namespace sparsemds;

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kMaxConstructN = 64;

// A bad argument value found after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::size_t>& values, bool one_based) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values[i] + (one_based ? 1 : 0));
  }
  return out;
}

void require_dimensions(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw UsageError("need 1 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
  if (n > kMaxConstructN) throw UsageError("n is capped at " + std::to_string(kMaxConstructN));
}

// "auto" or a decimal prime.
std::optional<std::uint64_t> parse_q(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t used = 0;
  std::uint64_t q = 0;
  try {
    q = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') throw UsageError("--q must be 'auto' or a prime");
  if (!is_prime(q)) throw UsageError("--q = " + text + " is not prime");
  return q;
}

std::string p3_witness_line(const P3Witness& w) {
  return "rows={" + join(w.rows, true) + "} union=" + std::to_string(w.union_size) +
         " required=" + std::to_string(w.required);
}

struct ConstructArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string out;
  std::string trace;
};

int cmd_construct(const ConstructArgs& a) {
  require_dimensions(a.n, a.k);
  const BalanceResult result = construct_balanced_support(a.n, a.k);
  const std::string summary = "column weights: " + join(result.trace.final_weights, false) +
                              "\nswaps: " + std::to_string(result.trace.records.size()) +
                              " (bound " + std::to_string(swap_bound(a.n, a.k)) + ")\n";
  const std::string trace_text = format_trace(result.trace);
  if (a.out.empty()) {
    std::cout << format_sm(result.matrix);
    std::cerr << summary;
  } else {
    write_sm_file(a.out, result.matrix);
    std::cout << "wrote " << a.out << "\n" << summary;
  }
  const std::string trace_path = !a.trace.empty() ? a.trace : (a.out.empty() ? "" : a.out + ".trace");
  if (!trace_path.empty()) {
    std::ofstream(trace_path, std::ios::binary | std::ios::trunc) << trace_text;
  }
  return kExitOk;
}

struct CheckArgs {
  std::string path;
  std::string property = "all";
  std::string method = "auto";
};

int cmd_check(const CheckArgs& a) {
  const SupportMatrix m = read_sm_file(a.path);
  bool all_pass = true;
  const bool want_all = a.property == "all";

  if (want_all || a.property == "p1") {
    const bool ok = check_p1(m);
    all_pass &= ok;
    std::vector<std::size_t> weights;
    for (std::size_t i = 0; i < m.k(); ++i) weights.push_back(m.row_weight(i));
    std::cout << "P1: " << (ok ? "PASS" : "FAIL") << " row weights " << join(weights, false)
              << " (target " << m.n() - m.k() + 1 << ")\n";
  }
  if (want_all || a.property == "p2") {
    const bool ok = check_p2(m);
    all_pass &= ok;
    std::cout << "P2: " << (ok ? "PASS" : "FAIL") << " column weights "
              << join(column_weights(m), false) << "\n";
  }
  if (want_all || a.property == "p3") {
    std::string method = a.method;
    if (method == "auto") method = m.k() <= kMaxBruteForceRows ? "brute" : "matching";
    P3Verdict verdict;
    if (method == "brute") {
      verdict = check_p3_bruteforce(m);
    } else {
      if (!check_p1(m)) {
        std::cout << "P3: UNDECIDED matching method needs P1; use --method brute\n";
        return kExitDomainFailure;
      }
      verdict = check_p3_matching(m);
    }
    all_pass &= verdict.holds;
    std::cout << "P3: " << (verdict.holds ? "PASS" : "FAIL");
    if (verdict.witness) std::cout << " " << p3_witness_line(*verdict.witness);
    std::cout << " (" << method << ")\n";
  }
  return all_pass ? kExitOk : kExitDomainFailure;
}

struct InstantiateArgs {
  std::string sm_path;
  std::string q = "auto";
  std::uint64_t q_multiplier = 1;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 64;
  bool force = false;
  std::string out;
};

int cmd_instantiate(const InstantiateArgs& a) {
  const SupportMatrix m = read_sm_file(a.sm_path);
  if (!check_p1(m)) {
    std::cerr << "refusing: row weights are not all n - k + 1\n";
    return kExitDomainFailure;
  }
  if (const P3Verdict p3 = check_p3_matching(m); !p3.holds) {
    std::cerr << "refusing: P3 violated " << p3_witness_line(*p3.witness) << "\n";
    return kExitDomainFailure;
  }
  InstantiateOptions options;
  options.q = parse_q(a.q);
  options.q_multiplier = a.q_multiplier;
  options.seed = a.seed;
  options.max_attempts = a.max_attempts;
  options.allow_small_field = a.force;
  if (options.q && *options.q <= binomial(m.n() - 1, m.k() - 1)) {
    if (!a.force) {
      throw UsageError("--q = " + a.q + " does not exceed C(n-1,k-1) = " +
                       std::to_string(binomial(m.n() - 1, m.k() - 1)) + "; pass --force to override");
    }
    std::cerr << "warning: q = " << a.q << " is at or below C(n-1,k-1); an MDS instantiation may not exist\n";
  }
  const InstantiateResult result = instantiate(m, options);
  const std::string text = format_gm(result.generator, result.seed);
  if (a.out.empty()) {
    std::cout << text;
    std::cerr << "q: " << result.generator.field().modulus() << "\nattempts: " << result.attempts << "\n";
  } else {
    write_gm_file(a.out, result.generator, result.seed);
    std::cout << "wrote " << a.out << "\nq: " << result.generator.field().modulus()
              << "\nattempts: " << result.attempts << "\n";
  }
  return kExitOk;
}

int cmd_encode(const std::string& gm_path, const std::string& message_csv) {
  const GmFile gm = read_gm_file(gm_path);
  const auto message = parse_field_vector(message_csv, gm.generator.field());
  if (message.size() != gm.generator.k()) {
    throw UsageError("message has " + std::to_string(message.size()) + " values, expected k = " +
                     std::to_string(gm.generator.k()));
  }
  std::cout << format_field_vector(encode(gm.generator, message)) << "\n";
  return kExitOk;
}

int cmd_decode(const std::string& gm_path, const std::string& received_csv) {
  const GmFile gm = read_gm_file(gm_path);
  const auto received = parse_field_vector(received_csv, gm.generator.field());
  if (received.size() != gm.generator.n()) {
    throw UsageError("received word has " + std::to_string(received.size()) +
                     " values, expected n = " + std::to_string(gm.generator.n()));
  }
  const DecodeResult result = error_decode(gm.generator, received);
  if (result.status == DecodeStatus::kFailure) {
    std::cerr << "decoding failed: more than "
              << correction_radius(gm.generator.n(), gm.generator.k()) << " corrupted symbols\n";
    return kExitDomainFailure;
  }
  std::cout << format_field_vector(result.message) << "\n[" << join(result.error_positions, true) << "]\n";
  return kExitOk;
}

struct SimulateArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t errors = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string q = "auto";
  std::uint64_t q_multiplier = 1;
  std::size_t max_attempts = 64;
  bool json = false;
  std::string gm_out;
};

int cmd_simulate(const SimulateArgs& a) {
  require_dimensions(a.n, a.k);
  if (a.trials == 0) throw UsageError("--trials must be at least 1");
  if (a.errors > a.n) throw UsageError("--errors exceeds n");
  SimulationConfig config;
  config.n = a.n;
  config.k = a.k;
  config.q = parse_q(a.q);
  config.q_multiplier = a.q_multiplier;
  config.trials = a.trials;
  config.errors_per_trial = a.errors;
  config.seed = a.seed;
  config.max_attempts = a.max_attempts;
  const SimulationReport report = run_simulation(config);
  if (!a.gm_out.empty()) {
    std::ofstream(a.gm_out, std::ios::binary | std::ios::trunc) << report.generator_gm;
  }
  if (a.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << format_report(report);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced sparsest MDS generator matrices"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a balanced sparsest support matrix (.sm)");
  construct->add_option("-n", construct_args.n, "Code length (sensors)")->required();
  construct->add_option("-k", construct_args.k, "Dimension (conditions)")->required();
  construct->add_option("-o,--out", construct_args.out, "Output .sm path (stdout if omitted)");
  construct->add_option("--trace", construct_args.trace, "Swap log path (default <out>.trace)");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check P1/P2/P3 for a .sm file");
  check->add_option("path", check_args.path, ".sm file")->required();
  check->add_option("-p,--property", check_args.property, "p1, p2, p3 or all")
      ->check(CLI::IsMember({"p1", "p2", "p3", "all"}));
  check->add_option("-m,--method", check_args.method, "P3 method: brute, matching or auto")
      ->check(CLI::IsMember({"brute", "matching", "auto"}));

  InstantiateArgs inst_args;
  auto* inst = app.add_subcommand("instantiate", "Draw an MDS generator (.gm) on a support");
  inst->add_option("sm_path", inst_args.sm_path, ".sm file")->required();
  inst->add_option("-q,--q", inst_args.q, "Field size: prime or 'auto'");
  inst->add_option("--q-multiplier", inst_args.q_multiplier, "Auto q exceeds multiplier * C(n-1,k-1)")
      ->check(CLI::PositiveNumber);
  inst->add_option("--seed", inst_args.seed, "RNG seed (default 0)");
  inst->add_option("--max-attempts", inst_args.max_attempts, "Random draws before giving up")
      ->check(CLI::PositiveNumber);
  inst->add_flag("--force", inst_args.force, "Allow q <= C(n-1,k-1)");
  inst->add_option("-o,--out", inst_args.out, "Output .gm path (stdout if omitted)");

  std::string encode_gm, encode_message;
  auto* enc = app.add_subcommand("encode", "Encode a message with a .gm generator");
  enc->add_option("gm_path", encode_gm, ".gm file")->required();
  enc->add_option("--message", encode_message, "Comma-separated message of length k")->required();

  std::string decode_gm, decode_received;
  auto* dec = app.add_subcommand("decode", "Decode a received word, locating corrupted symbols");
  dec->add_option("gm_path", decode_gm, ".gm file")->required();
  dec->add_option("--received", decode_received, "Comma-separated word of length n")->required();

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Sensor-network encode/corrupt/decode simulation");
  sim->add_option("-n", sim_args.n, "Sensors")->required();
  sim->add_option("-k", sim_args.k, "Conditions")->required();
  sim->add_option("--errors", sim_args.errors, "Faulty sensors per trial");
  sim->add_option("--trials", sim_args.trials, "Number of trials");
  sim->add_option("--seed", sim_args.seed, "RNG seed (default 0)");
  sim->add_option("-q,--q", sim_args.q, "Field size: prime or 'auto'");
  sim->add_option("--q-multiplier", sim_args.q_multiplier, "Auto q exceeds multiplier * C(n-1,k-1)")
      ->check(CLI::PositiveNumber);
  sim->add_option("--max-attempts", sim_args.max_attempts, "Instantiation attempts")
      ->check(CLI::PositiveNumber);
  sim->add_flag("--json", sim_args.json, "Emit the JSON report");
  sim->add_option("--gm-out", sim_args.gm_out, "Also write the generator used (.gm)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_args);
    if (check->parsed()) return cmd_check(check_args);
    if (inst->parsed()) return cmd_instantiate(inst_args);
    if (enc->parsed()) return cmd_encode(encode_gm, encode_message);
    if (dec->parsed()) return cmd_decode(decode_gm, decode_received);
    if (sim->parsed()) return cmd_simulate(sim_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FieldTooSmallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
  return kExitUsage;
}
