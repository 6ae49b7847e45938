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

#include "sparsemds/balancer.h"

#include <numeric>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sparsemds/errors.h"

namespace sparsemds {
namespace {

SupportMatrix from(std::vector<std::string> rows) { return SupportMatrix::from_strings(rows); }

struct Golden {
  std::size_t n;
  std::size_t k;
  std::size_t swaps;
  std::vector<std::string> rows;
};

// Produced by an independent script that runs the same greedy with a naive
// subset-enumeration test for the union condition.
const std::vector<Golden>& goldens() {
  static const std::vector<Golden> g = {
      {8, 5, 2, {"11110000", "11100001", "00111100", "00011110", "00001111"}},
      {6, 3, 2, {"111001", "110110", "001111"}},
      {4, 2, 0, {"1110", "0111"}},
      {5, 5, 0, {"10000", "01000", "00100", "00010", "00001"}},
      {9, 4, 3, {"111101001", "111011100", "101110110", "000111111"}},
      {12, 6, 6,
       {"111111000001", "111110000011", "111100111000", "000111111100", "000011111110",
        "000001111111"}},
  };
  return g;
}

TEST(Balance, MatchesFrozenOutputs) {
  for (const Golden& g : goldens()) {
    const BalanceResult r = construct_balanced_support(g.n, g.k);
    EXPECT_EQ(r.trace.records.size(), g.swaps) << g.n << "," << g.k;
    EXPECT_EQ(r.matrix, from(g.rows)) << g.n << "," << g.k << "\n" << r.matrix.to_string();
  }
}

TEST(Balance, EightByFiveTrace) {
  const BalanceResult r = construct_balanced_support(8, 5);
  EXPECT_EQ(format_trace(r.trace), "1 4 1 2 3\n2 5 8 2 3\n");
  EXPECT_EQ(r.trace.initial_weights, (std::vector<std::size_t>{1, 2, 3, 4, 4, 3, 2, 1}));
  EXPECT_EQ(r.trace.final_weights, (std::vector<std::size_t>{2, 2, 3, 3, 3, 3, 2, 2}));
  EXPECT_EQ(swap_bound(8, 5), 16u);
}

TEST(FindSwapRow, CyclicEightByFive) {
  // Rows 1, 2 and 3 all qualify; the smallest is chosen.
  EXPECT_EQ(find_swap_row(initial_cyclic_matrix(8, 5), 3, 0), 1u);
}

TEST(FindSwapRow, Preconditions) {
  const SupportMatrix cyclic = initial_cyclic_matrix(8, 5);
  EXPECT_THROW(find_swap_row(cyclic, 2, 1), PreconditionError);  // weights 3 and 2
  EXPECT_THROW(find_swap_row(cyclic, 3, 8), PreconditionError);
  const SupportMatrix p = from({"10001110", "10001011", "10000111", "01111000", "01110100"});
  SupportMatrix unbalanced = p;
  EXPECT_THROW(find_swap_row(unbalanced, 0, 1), PreconditionError);  // P3 fails
  EXPECT_THROW(balance(p), PreconditionError);
  EXPECT_THROW(balance(from({"111", "011"})), PreconditionError);  // P1 fails
}

TEST(Balance, AlreadyBalancedIsUntouched) {
  const SupportMatrix m = from({"1110", "0111"});
  const BalanceResult r = balance(m);
  EXPECT_TRUE(r.trace.records.empty());
  EXPECT_EQ(r.matrix, m);
  EXPECT_EQ(format_trace(r.trace), "");
}

TEST(Balance, InvariantsAcrossSweep) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const BalanceResult r = construct_balanced_support(n, k);
      const auto& records = r.trace.records;
      ASSERT_LE(records.size(), swap_bound(n, k)) << n << "," << k;
      ASSERT_TRUE(check_p1(r.matrix));
      ASSERT_TRUE(check_p2(r.matrix));
      ASSERT_TRUE(check_p3_matching(r.matrix).holds);
      if (k <= 10) {
        ASSERT_TRUE(oracle::p3_by_sets(r.matrix)) << n << "," << k;
      }
      ASSERT_EQ(r.trace.final_weights, column_weights(r.matrix));
      const auto total = [](const std::vector<std::size_t>& w) {
        return std::accumulate(w.begin(), w.end(), std::size_t{0});
      };
      ASSERT_EQ(total(r.trace.final_weights), k * (n - k + 1));
      ASSERT_EQ(total(r.trace.initial_weights), k * (n - k + 1));

      // Replay the trace from the cyclic start.
      SupportMatrix replay = initial_cyclic_matrix(n, k);
      std::size_t last_spread = records.empty() ? 0 : records.front().spread_before;
      for (std::size_t s = 0; s < records.size(); ++s) {
        const SwapRecord& rec = records[s];
        ASSERT_EQ(rec.iteration, s + 1);
        ASSERT_LE(rec.spread_before, last_spread);
        ASSERT_GE(rec.spread_before, 2u);
        last_spread = rec.spread_before;
        const auto w = column_weights(replay);
        ASSERT_EQ(w[rec.heavy_column] - w[rec.light_column], rec.spread_before);
        ASSERT_TRUE(replay.get(rec.row, rec.heavy_column));
        ASSERT_FALSE(replay.get(rec.row, rec.light_column));
        replay.set(rec.row, rec.heavy_column, false);
        replay.set(rec.row, rec.light_column, true);
        ASSERT_TRUE(check_p3_matching(replay).holds);
      }
      ASSERT_EQ(replay, r.matrix);

      // Each level of the spread is left within floor(n / 2) swaps.
      std::size_t run = 0;
      for (std::size_t s = 0; s < records.size(); ++s) {
        run = (s > 0 && records[s].spread_before == records[s - 1].spread_before) ? run + 1 : 1;
        ASSERT_LE(run, n / 2) << n << "," << k;
      }
    }
  }
}

TEST(Balance, Deterministic) {
  const BalanceResult a = construct_balanced_support(12, 6);
  const BalanceResult b = construct_balanced_support(12, 6);
  EXPECT_EQ(a.matrix, b.matrix);
  EXPECT_EQ(a.trace.records, b.trace.records);
}

TEST(Balance, LargerInstancesStayWithinBound) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{30, 10}, {40, 20}, {64, 32}}) {
    const BalanceResult r = construct_balanced_support(n, k);
    EXPECT_LE(r.trace.records.size(), swap_bound(n, k));
    EXPECT_TRUE(check_p2(r.matrix));
    EXPECT_TRUE(check_p3_matching(r.matrix).holds);
  }
}

TEST(Balance, RandomStartsWithP3AlsoBalance) {
  Rng rng(99);
  int balanced = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(9);
    const std::size_t k = 1 + rng.uniform_below(std::min<std::size_t>(n, 6));
    const SupportMatrix m = oracle::random_p1_matrix(k, n, rng);
    if (!check_p3_bruteforce(m).holds) continue;
    const BalanceResult r = balance(m);
    ASSERT_TRUE(check_p2(r.matrix));
    ASSERT_TRUE(oracle::p3_by_sets(r.matrix));
    ++balanced;
  }
  EXPECT_GT(balanced, 50);
}

}  // namespace
}  // namespace sparsemds
