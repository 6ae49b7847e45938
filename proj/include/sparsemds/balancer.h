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

#ifndef SPARSEMDS_BALANCER_H_
#define SPARSEMDS_BALANCER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "sparsemds/support_matrix.h"

namespace sparsemds {

// One entry move: bit (row, heavy_column) 1 -> 0 and (row, light_column)
// 0 -> 1. Indices are 0-based; `iteration` counts from 1.
struct SwapRecord {
  std::size_t iteration = 0;
  std::size_t heavy_column = 0;  // j_max
  std::size_t light_column = 0;  // j_min
  std::size_t row = 0;           // i_s
  std::size_t spread_before = 0;

  friend bool operator==(const SwapRecord&, const SwapRecord&) = default;
};

struct BalanceTrace {
  std::vector<SwapRecord> records;
  std::vector<std::size_t> initial_weights;
  std::vector<std::size_t> final_weights;
};

struct BalanceResult {
  SupportMatrix matrix;
  BalanceTrace trace;
};

// Upper bound (k - 1) * floor(n / 2) on the number of swaps from the cyclic
// start.
std::size_t swap_bound(std::size_t n, std::size_t k);

// Smallest row with a 1 in `heavy_column` and a 0 in `light_column` whose
// swap keeps P3 (P1 is preserved by any swap).
//
// Throws PreconditionError unless m satisfies P1 and P3 and
// weight(heavy) - weight(light) >= 2. Throws InternalError if no candidate
// row keeps P3; for a valid input one always exists, so that is a bug.
std::size_t find_swap_row(const SupportMatrix& m, std::size_t heavy_column,
                          std::size_t light_column);

// Moves ones from a heaviest to a lightest column until the column weights
// differ by at most one, keeping P1 and P3 at every step. Ties pick the
// smallest column index and the smallest admissible row, so the result is a
// pure function of the input. Throws PreconditionError if m0 violates P1 or
// P3.
BalanceResult balance(SupportMatrix m0);

// balance(initial_cyclic_matrix(n, k)).
BalanceResult construct_balanced_support(std::size_t n, std::size_t k);

// One line per swap: "iter j_max j_min i_s spread", column and row indices
// 1-based.
std::string format_trace(const BalanceTrace& trace);

}  // namespace sparsemds

#endif  // SPARSEMDS_BALANCER_H_
