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

#include "sparsemds/sensor_sim.h"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <string>

#include "sparsemds/balancer.h"
#include "sparsemds/errors.h"
#include "sparsemds/mds_codec.h"

namespace sparsemds {
namespace {

// Keeps trial streams disjoint from the instantiation attempt streams.
constexpr std::uint64_t kTrialStreamSalt = 0x5e45'0a5e'7e1a'1c0dULL;

std::vector<std::size_t> random_positions(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pick = i + static_cast<std::size_t>(rng.uniform_below(n - i));
    std::swap(pool[i], pool[pick]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

struct TrialOutcome {
  bool success = false;
  bool culprits_identified = false;
  bool decode_failure = false;
};

TrialOutcome run_trial(const GeneratorMatrix& g, std::size_t errors, Rng& rng) {
  const PrimeField& field = g.field();
  std::vector<FieldElement> message;
  message.reserve(g.k());
  for (std::size_t i = 0; i < g.k(); ++i) message.push_back(field.element(rng.uniform_below(field.modulus())));
  const auto codeword = encode(g, message);
  const auto faulty = random_positions(g.n(), errors, rng);
  const auto received = corrupt(codeword, faulty, rng);
  const DecodeResult decoded = error_decode(g, received);

  TrialOutcome outcome;
  if (decoded.status == DecodeStatus::kFailure) {
    outcome.decode_failure = true;
    return outcome;
  }
  outcome.success = decoded.message == message;
  outcome.culprits_identified = outcome.success && decoded.error_positions == faulty;
  return outcome;
}

}  // namespace

std::vector<FieldElement> corrupt(std::span<const FieldElement> codeword,
                                  std::span<const std::size_t> positions, Rng& rng) {
  std::vector<FieldElement> out(codeword.begin(), codeword.end());
  std::vector<bool> seen(codeword.size(), false);
  for (std::size_t p : positions) {
    if (p >= codeword.size()) {
      throw PreconditionError("corrupt: position " + std::to_string(p) + " out of range");
    }
    if (seen[p]) throw PreconditionError("corrupt: position " + std::to_string(p) + " repeated");
    seen[p] = true;
    const PrimeField& field = out[p].field();
    // Uniform over the q - 1 values different from the original.
    const std::uint64_t shift = 1 + rng.uniform_below(field.modulus() - 1);
    out[p] = out[p] + field.element(shift);
  }
  return out;
}

SimulationReport run_simulation(const SimulationConfig& config, Execution exec) {
  if (config.trials == 0) throw PreconditionError("simulation needs at least one trial");
  if (config.k == 0 || config.k > config.n) throw PreconditionError("simulation needs 1 <= k <= n");
  if (config.errors_per_trial > config.n) {
    throw PreconditionError("errors_per_trial exceeds the number of sensors");
  }

  const BalanceResult support = construct_balanced_support(config.n, config.k);
  InstantiateOptions options;
  options.q = config.q;
  options.q_multiplier = config.q_multiplier;
  options.seed = config.seed;
  options.max_attempts = config.max_attempts;
  InstantiateResult inst = [&] {
    try {
      return instantiate(support.matrix, options);
    } catch (const AttemptsExhaustedError& e) {
      throw AttemptsExhaustedError("simulation (n = " + std::to_string(config.n) + ", k = " +
                                   std::to_string(config.k) + "): " + e.what());
    }
  }();
  const GeneratorMatrix& g = inst.generator;

  SimulationReport report;
  report.n = config.n;
  report.k = config.k;
  report.trials = config.trials;
  report.errors_per_trial = config.errors_per_trial;
  report.seed = config.seed;
  report.correction_radius = correction_radius(config.n, config.k);
  report.per_sensor_conditions = column_weights(support_of(g));
  const auto [lo, hi] = std::minmax_element(report.per_sensor_conditions.begin(),
                                            report.per_sensor_conditions.end());
  report.workload_spread = *hi - *lo;
  report.q_used = g.field().modulus();
  report.attempts_used = inst.attempts;
  report.generator_gm = format_gm(g, inst.seed);

  const std::uint64_t trial_seed = config.seed ^ kTrialStreamSalt;
  const auto trials = static_cast<std::int64_t>(config.trials);
  std::size_t successes = 0;
  std::size_t identified = 0;
  std::size_t failures = 0;
  auto tally = [&](std::int64_t t, std::size_t& s, std::size_t& c, std::size_t& f) {
    Rng rng(derive_seed(trial_seed, static_cast<std::uint64_t>(t)));
    const TrialOutcome o = run_trial(g, config.errors_per_trial, rng);
    s += o.success;
    c += o.culprits_identified;
    f += o.decode_failure;
  };
  if (exec == Execution::kSerial) {
    for (std::int64_t t = 0; t < trials; ++t) tally(t, successes, identified, failures);
  } else {
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : successes, identified, failures)
    for (std::int64_t t = 0; t < trials; ++t) tally(t, successes, identified, failures);
  }

  report.successes = successes;
  report.culprits_identified = identified;
  report.decode_failures = failures;
  report.miscorrections = config.trials - successes - failures;
  report.decode_success_rate = static_cast<double>(successes) / static_cast<double>(config.trials);
  report.culprit_identification_rate =
      static_cast<double>(identified) / static_cast<double>(config.trials);
  return report;
}

nlohmann::ordered_json to_json(const SimulationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["trials"] = r.trials;
  j["errors_per_trial"] = r.errors_per_trial;
  j["correction_radius"] = r.correction_radius;
  j["seed"] = r.seed;
  j["q_used"] = r.q_used;
  j["attempts_used"] = r.attempts_used;
  j["per_sensor_conditions"] = r.per_sensor_conditions;
  j["workload_spread"] = r.workload_spread;
  j["decode_success_rate"] = r.decode_success_rate;
  j["culprit_identification_rate"] = r.culprit_identification_rate;
  j["successes"] = r.successes;
  j["culprits_identified"] = r.culprits_identified;
  j["decode_failures"] = r.decode_failures;
  j["miscorrections"] = r.miscorrections;
  j["generator_gm"] = r.generator_gm;
  return j;
}

std::string format_report(const SimulationReport& r) {
  std::ostringstream out;
  out << "sensors (n)                  " << r.n << "\n"
      << "conditions (k)               " << r.k << "\n"
      << "field size q                 " << r.q_used << "\n"
      << "instantiation attempts       " << r.attempts_used << "\n"
      << "correction radius t          " << r.correction_radius << "\n"
      << "faulty sensors per trial     " << r.errors_per_trial << "\n"
      << "trials                       " << r.trials << "\n"
      << "seed                         " << r.seed << "\n\n";
  out << "sensor  conditions measured\n";
  for (std::size_t j = 0; j < r.per_sensor_conditions.size(); ++j) {
    out << std::setw(6) << j + 1 << "  " << r.per_sensor_conditions[j] << "\n";
  }
  out << "\nworkload spread              " << r.workload_spread << "\n"
      << std::fixed << std::setprecision(4)
      << "decode success rate          " << r.decode_success_rate << "\n"
      << "culprit identification rate  " << r.culprit_identification_rate << "\n"
      << "decode failures              " << r.decode_failures << "\n"
      << "miscorrections               " << r.miscorrections << "\n";
  return out.str();
}

}  // namespace sparsemds
