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

#include <algorithm>
#include <cassert>
#include <string>

#include "sparsemds/errors.h"

namespace sparsemds {
namespace {

void require_p1_p3(const SupportMatrix& m, const char* who) {
  if (!check_p1(m)) {
    throw PreconditionError(std::string(who) + ": every row must have weight n - k + 1");
  }
  if (!check_p3_matching(m).holds) {
    throw PreconditionError(std::string(who) + ": row-union condition (P3) does not hold");
  }
}

// Tries candidates in increasing row order: apply the swap, test, revert on
// failure.
std::size_t first_admissible_row(SupportMatrix& m, std::size_t heavy, std::size_t light) {
  bool had_candidate = false;
  for (std::size_t i = 0; i < m.k(); ++i) {
    if (!m.get(i, heavy) || m.get(i, light)) continue;
    had_candidate = true;
    m.set(i, heavy, false);
    m.set(i, light, true);
    const bool keeps_p3 = check_p3_matching(m).holds;
    m.set(i, heavy, true);
    m.set(i, light, false);
    if (keeps_p3) return i;
  }
  throw InternalError(had_candidate
                          ? "no swap row keeps the row-union condition between columns " +
                                std::to_string(heavy) + " and " + std::to_string(light)
                          : "no row has a 1 in column " + std::to_string(heavy) +
                                " and a 0 in column " + std::to_string(light));
}

}  // namespace

std::size_t swap_bound(std::size_t n, std::size_t k) { return (k - 1) * (n / 2); }

std::size_t find_swap_row(const SupportMatrix& m, std::size_t heavy_column,
                          std::size_t light_column) {
  if (heavy_column >= m.n() || light_column >= m.n()) {
    throw PreconditionError("find_swap_row: column index out of range");
  }
  const auto weights = column_weights(m);
  if (weights[heavy_column] < weights[light_column] + 2) {
    throw PreconditionError("find_swap_row: heavy column must outweigh light column by >= 2");
  }
  require_p1_p3(m, "find_swap_row");
  SupportMatrix scratch = m;
  return first_admissible_row(scratch, heavy_column, light_column);
}

BalanceResult balance(SupportMatrix m) {
  require_p1_p3(m, "balance");
  BalanceTrace trace;
  trace.initial_weights = column_weights(m);
  std::vector<std::size_t> weights = trace.initial_weights;
  for (std::size_t iteration = 1;; ++iteration) {
    const auto heavy_it = std::max_element(weights.begin(), weights.end());
    const auto light_it = std::min_element(weights.begin(), weights.end());
    const std::size_t spread = *heavy_it - *light_it;
    if (spread <= 1) break;
    const auto heavy = static_cast<std::size_t>(heavy_it - weights.begin());
    const auto light = static_cast<std::size_t>(light_it - weights.begin());
    const std::size_t row = first_admissible_row(m, heavy, light);
    m.set(row, heavy, false);
    m.set(row, light, true);
    --weights[heavy];
    ++weights[light];
    trace.records.push_back({iteration, heavy, light, row, spread});
    assert(check_p1(m) && check_p3_matching(m).holds);
  }
  trace.final_weights = std::move(weights);
  return {std::move(m), std::move(trace)};
}

BalanceResult construct_balanced_support(std::size_t n, std::size_t k) {
  return balance(initial_cyclic_matrix(n, k));
}

std::string format_trace(const BalanceTrace& trace) {
  std::string out;
  for (const SwapRecord& r : trace.records) {
    out += std::to_string(r.iteration) + " " + std::to_string(r.heavy_column + 1) + " " +
           std::to_string(r.light_column + 1) + " " + std::to_string(r.row + 1) + " " +
           std::to_string(r.spread_before) + "\n";
  }
  return out;
}

}  // namespace sparsemds
