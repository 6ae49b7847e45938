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

#ifndef SPARSEMDS_SUPPORT_MATRIX_H_
#define SPARSEMDS_SUPPORT_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsemds/matching.h"
#include "sparsemds/random.h"

namespace sparsemds {

// Enumeration caps for the exponential checkers.
inline constexpr std::size_t kMaxBruteForceRows = 20;
inline constexpr std::size_t kMaxHallColumns = 20;
inline constexpr std::uint64_t kMaxMatchableSubsets = 1'000'000;

// k x n binary matrix, 1 <= k <= n. Each row is a bitset packed into 64-bit
// words so row-support unions are word-wise ORs. Indices are 0-based.
class SupportMatrix {
 public:
  // All-zero matrix. Throws PreconditionError unless 1 <= k <= n.
  SupportMatrix(std::size_t k, std::size_t n);

  // Rows given as strings over {0,1}, all of equal length.
  static SupportMatrix from_strings(std::span<const std::string> rows);

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }

  bool get(std::size_t row, std::size_t col) const {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
  }
  void set(std::size_t row, std::size_t col, bool value);

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row_words(std::size_t row) const {
    return {bits_.data() + row * words_, words_};
  }

  std::size_t row_weight(std::size_t row) const;
  std::vector<std::size_t> row_support(std::size_t row) const;     // R_i
  std::vector<std::size_t> column_support(std::size_t col) const;  // C_j

  // Rows of '0'/'1' characters joined by '\n' (no trailing newline).
  std::string to_string() const;

  friend bool operator==(const SupportMatrix&, const SupportMatrix&) = default;

 private:
  std::size_t k_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// A nonempty row set I whose row-support union is too small:
// union_size < required = n - k + |I|. Row indices are 0-based, ascending.
struct P3Witness {
  std::vector<std::size_t> rows;
  std::size_t union_size = 0;
  std::size_t required = 0;
};

struct P3Verdict {
  bool holds = true;
  std::optional<P3Witness> witness;
};

// Row i (0-based) supported on columns {i, ..., i + n - k}: the all-ones
// block of length n - k + 1 shifted cyclically down the rows.
SupportMatrix initial_cyclic_matrix(std::size_t n, std::size_t k);

std::vector<std::size_t> column_weights(const SupportMatrix& m);

// |union of R_i over the listed rows|.
std::size_t row_union_size(const SupportMatrix& m, std::span<const std::size_t> rows);

// Every row has weight n - k + 1.
bool check_p1(const SupportMatrix& m);

// Column weights differ pairwise by at most one.
bool check_p2(const SupportMatrix& m);

// |union_{i in I} R_i| >= n - k + |I| for every nonempty I, by enumerating
// all 2^k - 1 row sets. A failure carries the smallest violating I (ties
// broken by the smallest bitmask, row i = bit i). Throws TooLargeError for
// k > kMaxBruteForceRows.
P3Verdict check_p3_bruteforce(const SupportMatrix& m, Execution exec = Execution::kParallel);

// Polynomial check of the same condition for matrices satisfying P1: for
// every row i, the rows other than i must be matchable into the columns
// outside R_i. A failure carries a violating I built from the Hall deficiency
// set (not necessarily minimum). Throws PreconditionError if P1 fails.
P3Verdict check_p3_matching(const SupportMatrix& m);

// |union_{j in J} C_j| >= |J| for every column set J with |J| <= k.
// Throws TooLargeError for n > kMaxHallColumns.
bool check_hall_columns(const SupportMatrix& m, Execution exec = Execution::kParallel);

// Every k x k column subgraph of the bipartite row/column graph has a perfect
// matching. Throws TooLargeError when C(n, k) > kMaxMatchableSubsets.
bool check_all_k_subsets_matchable(const SupportMatrix& m, Execution exec = Execution::kParallel);

// Left vertices are rows, right vertices columns, one edge per 1 entry.
BipartiteGraph to_bipartite_graph(const SupportMatrix& m);

// `.sm` text format: "k n" on the first line, then k lines of n characters
// from {0,1}. parse_sm throws ParseError on any deviation.
SupportMatrix parse_sm(std::string_view text);
std::string format_sm(const SupportMatrix& m);

SupportMatrix read_sm_file(const std::string& path);
void write_sm_file(const std::string& path, const SupportMatrix& m);

}  // namespace sparsemds

#endif  // SPARSEMDS_SUPPORT_MATRIX_H_
