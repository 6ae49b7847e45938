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

#ifndef SPARSEMDS_SENSOR_SIM_H_
#define SPARSEMDS_SENSOR_SIM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sparsemds/finite_field.h"
#include "sparsemds/random.h"

namespace sparsemds {

// n sensors jointly observing k conditions. Sensor j transmits the inner
// product of the condition vector with column j of a balanced sparsest MDS
// generator; `errors_per_trial` sensors per trial report a wrong value.
struct SimulationConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> q;  // nullopt: smallest prime above C(n-1, k-1) * q_multiplier
  std::uint64_t q_multiplier = 1;
  std::size_t trials = 1;
  std::size_t errors_per_trial = 0;  // may exceed the correction radius on purpose
  std::uint64_t seed = 0;
  std::size_t max_attempts = 64;
};

struct SimulationReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::size_t errors_per_trial = 0;
  std::uint64_t seed = 0;
  std::size_t correction_radius = 0;

  std::vector<std::size_t> per_sensor_conditions;  // column weights of the support
  std::size_t workload_spread = 0;
  double decode_success_rate = 0.0;
  double culprit_identification_rate = 0.0;
  std::uint64_t q_used = 0;
  std::size_t attempts_used = 0;

  std::size_t successes = 0;
  std::size_t culprits_identified = 0;
  std::size_t decode_failures = 0;  // decoder found no codeword within radius
  std::size_t miscorrections = 0;   // decoder returned a wrong message

  std::string generator_gm;  // `.gm` text of the matrix used
};

// Replaces each listed coordinate with a uniformly random different value.
// Throws PreconditionError for an out-of-range or repeated position.
std::vector<FieldElement> corrupt(std::span<const FieldElement> codeword,
                                  std::span<const std::size_t> positions, Rng& rng);

// Builds one balanced sparsest MDS generator for (n, k), then runs `trials`
// independent encode / corrupt / decode rounds. Trial t draws from
// derive_seed(seed, t), so serial and parallel runs report the same numbers.
SimulationReport run_simulation(const SimulationConfig& config,
                                Execution exec = Execution::kParallel);

nlohmann::ordered_json to_json(const SimulationReport& report);

// Human-readable summary table.
std::string format_report(const SimulationReport& report);

}  // namespace sparsemds

#endif  // SPARSEMDS_SENSOR_SIM_H_
