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

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sparsemds/errors.h"
#include "sparsemds/mds_codec.h"

namespace sparsemds {
namespace {

std::vector<FieldElement> vec(const PrimeField& f, std::vector<std::uint64_t> v) {
  std::vector<FieldElement> out;
  for (auto x : v) out.push_back(f.element(x));
  return out;
}

TEST(Corrupt, ChangesExactlyTheListedPositions) {
  const PrimeField f37(37);
  const auto c = vec(f37, {0, 1, 2, 3, 4, 5, 6, 7});
  Rng rng(1);
  const std::vector<std::size_t> positions{2, 5};
  for (int trial = 0; trial < 200; ++trial) {
    const auto y = corrupt(c, positions, rng);
    for (std::size_t j = 0; j < c.size(); ++j) {
      const bool listed = j == 2 || j == 5;
      ASSERT_EQ(y[j] != c[j], listed) << j;
    }
  }
  EXPECT_EQ(corrupt(c, {}, rng), c);
}

TEST(Corrupt, CoversEveryOtherValue) {
  const PrimeField f5(5);
  const auto c = vec(f5, {3});
  Rng rng(2);
  std::set<std::uint64_t> seen;
  const std::vector<std::size_t> positions{0};
  for (int trial = 0; trial < 200; ++trial) seen.insert(corrupt(c, positions, rng)[0].value());
  EXPECT_EQ(seen, (std::set<std::uint64_t>{0, 1, 2, 4}));
}

TEST(Corrupt, RejectsBadPositions) {
  const auto c = vec(PrimeField(5), {1, 2, 3});
  Rng rng(3);
  EXPECT_THROW(corrupt(c, std::vector<std::size_t>{3}, rng), PreconditionError);
  EXPECT_THROW(corrupt(c, std::vector<std::size_t>{1, 1}, rng), PreconditionError);
}

TEST(RunSimulation, EightByFiveSingleErrorIsAlwaysCorrected) {
  const SimulationReport r = run_simulation({.n = 8, .k = 5, .trials = 100, .errors_per_trial = 1, .seed = 7});
  EXPECT_EQ(r.decode_success_rate, 1.0);
  EXPECT_EQ(r.culprit_identification_rate, 1.0);
  EXPECT_LE(r.workload_spread, 1u);
  EXPECT_EQ(r.q_used, 37u);
  EXPECT_EQ(r.correction_radius, 1u);
  EXPECT_EQ(r.successes, 100u);
  EXPECT_EQ(r.decode_failures, 0u);
  EXPECT_EQ(r.miscorrections, 0u);
  EXPECT_EQ(std::accumulate(r.per_sensor_conditions.begin(), r.per_sensor_conditions.end(),
                            std::size_t{0}),
            5u * 4u);
}

TEST(RunSimulation, NoErrors) {
  const SimulationReport r = run_simulation({.n = 6, .k = 3, .trials = 50, .errors_per_trial = 0});
  EXPECT_EQ(r.decode_success_rate, 1.0);
  EXPECT_EQ(r.culprit_identification_rate, 1.0);
}

TEST(RunSimulation, BeyondRadiusFailsSometimes) {
  const SimulationReport r = run_simulation({.n = 8, .k = 5, .trials = 300, .errors_per_trial = 2, .seed = 1});
  EXPECT_LT(r.decode_success_rate, 1.0);
  EXPECT_EQ(r.successes + r.decode_failures + r.miscorrections, r.trials);
  EXPECT_LE(r.culprits_identified, r.successes);
}

// Replays the trials of a small configuration with the nearest-codeword
// oracle: success must occur exactly when the true message is the unique
// codeword within the radius.
TEST(RunSimulation, BeyondRadiusMatchesNearestCodewordOracle) {
  for (std::size_t errors : {3u, 4u}) {
    const SimulationConfig config{.n = 6, .k = 2, .trials = 200, .errors_per_trial = errors, .seed = 4};
    const SimulationReport r = run_simulation(config);
    const GmFile gm = parse_gm(r.generator_gm);
    const GeneratorMatrix& g = gm.generator;
    std::vector<std::vector<std::uint64_t>> dense(g.k());
    for (std::size_t i = 0; i < g.k(); ++i) {
      const auto row = g.entries().row(i);
      dense[i].assign(row.begin(), row.end());
    }
    // Independent sampling with the same shape as the simulation.
    Rng rng(123 + errors);
    std::size_t oracle_successes = 0;
    std::size_t decoder_successes = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<FieldElement> x;
      for (std::size_t i = 0; i < g.k(); ++i) x.push_back(g.field().element(rng.uniform_below(g.field().modulus())));
      std::vector<std::size_t> positions(g.n());
      std::iota(positions.begin(), positions.end(), std::size_t{0});
      for (std::size_t i = 0; i < errors; ++i) std::swap(positions[i], positions[i + rng.uniform_below(g.n() - i)]);
      positions.resize(errors);
      const auto y = corrupt(encode(g, x), positions, rng);
      std::vector<std::uint64_t> y_raw;
      for (const auto& v : y) y_raw.push_back(v.value());
      const auto nearest = oracle::nearest_codeword(dense, g.field().modulus(), y_raw);
      std::vector<std::uint64_t> x_raw;
      for (const auto& v : x) x_raw.push_back(v.value());
      const bool oracle_ok = nearest.distance <= r.correction_radius && nearest.message == x_raw;
      const DecodeResult d = error_decode(g, y);
      const bool decoder_ok = d.status == DecodeStatus::kUnique && d.message == x;
      ASSERT_EQ(oracle_ok, decoder_ok);
      oracle_successes += oracle_ok;
      decoder_successes += decoder_ok;
    }
    EXPECT_EQ(oracle_successes, decoder_successes);
    EXPECT_LT(r.decode_success_rate, 1.0);
  }
}

TEST(RunSimulation, SerialAndParallelAgree) {
  const SimulationConfig config{.n = 9, .k = 4, .trials = 200, .errors_per_trial = 3, .seed = 11};
  const SimulationReport s = run_simulation(config, Execution::kSerial);
  const SimulationReport p = run_simulation(config, Execution::kParallel);
  EXPECT_EQ(to_json(s).dump(), to_json(p).dump());
}

TEST(RunSimulation, DeterministicInSeed) {
  const SimulationConfig config{.n = 8, .k = 5, .trials = 50, .errors_per_trial = 1, .seed = 7};
  EXPECT_EQ(to_json(run_simulation(config)).dump(2), to_json(run_simulation(config)).dump(2));
  SimulationConfig other = config;
  other.errors_per_trial = 2;
  other.seed = 8;
  EXPECT_NE(to_json(run_simulation(config)).dump(), to_json(run_simulation(other)).dump());
}

TEST(RunSimulation, RejectsBadConfig) {
  EXPECT_THROW(run_simulation({.n = 4, .k = 5, .trials = 1}), PreconditionError);
  EXPECT_THROW(run_simulation({.n = 4, .k = 2, .trials = 0}), PreconditionError);
  EXPECT_THROW(run_simulation({.n = 4, .k = 2, .trials = 1, .errors_per_trial = 5}), PreconditionError);
}

TEST(ToJson, FieldNames) {
  const auto j = to_json(run_simulation({.n = 4, .k = 2, .trials = 3, .errors_per_trial = 1}));
  for (const char* key : {"per_sensor_conditions", "workload_spread", "decode_success_rate",
                          "culprit_identification_rate", "q_used", "attempts_used", "generator_gm"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["q_used"], 5);
  EXPECT_EQ(j["per_sensor_conditions"], nlohmann::json::parse("[1,2,2,1]"));
  EXPECT_EQ(j["workload_spread"], 1);
  EXPECT_NO_THROW(parse_gm(j["generator_gm"].get<std::string>()));
}

TEST(FormatReport, ListsEverySensor) {
  const std::string text = format_report(run_simulation({.n = 6, .k = 3, .trials = 2}));
  EXPECT_NE(text.find("decode success rate"), std::string::npos);
  EXPECT_NE(text.find("     6  "), std::string::npos);
}

}  // namespace
}  // namespace sparsemds
