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

#include "sparsemds/support_matrix.h"

#include <algorithm>
#include <bit>
#include <string>

#include "sparsemds/combinatorics.h"
#include "sparsemds/errors.h"
#include "text_io.h"

namespace sparsemds {

SupportMatrix::SupportMatrix(std::size_t k, std::size_t n)
    : k_(k), n_(n), words_((n + 63) / 64), bits_(k * words_, 0) {
  if (k == 0 || k > n) {
    throw PreconditionError("support matrix needs 1 <= k <= n, got k = " + std::to_string(k) +
                            ", n = " + std::to_string(n));
  }
}

SupportMatrix SupportMatrix::from_strings(std::span<const std::string> rows) {
  if (rows.empty()) throw ParseError("support matrix has no rows");
  SupportMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.n_) throw ParseError("ragged row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < m.n_; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw ParseError(std::string("foreign character '") + c + "' in row " + std::to_string(i + 1));
      }
      m.set(i, j, c == '1');
    }
  }
  return m;
}

void SupportMatrix::set(std::size_t row, std::size_t col, bool value) {
  if (row >= k_ || col >= n_) throw std::out_of_range("SupportMatrix::set: index out of range");
  std::uint64_t& word = bits_[row * words_ + col / 64];
  const std::uint64_t bit = std::uint64_t{1} << (col % 64);
  word = value ? (word | bit) : (word & ~bit);
}

std::size_t SupportMatrix::row_weight(std::size_t row) const {
  std::size_t weight = 0;
  for (std::uint64_t w : row_words(row)) weight += std::popcount(w);
  return weight;
}

std::vector<std::size_t> SupportMatrix::row_support(std::size_t row) const {
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n_; ++j) {
    if (get(row, j)) support.push_back(j);
  }
  return support;
}

std::vector<std::size_t> SupportMatrix::column_support(std::size_t col) const {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < k_; ++i) {
    if (get(i, col)) support.push_back(i);
  }
  return support;
}

std::string SupportMatrix::to_string() const {
  std::string out;
  out.reserve(k_ * (n_ + 1));
  for (std::size_t i = 0; i < k_; ++i) {
    if (i > 0) out.push_back('\n');
    for (std::size_t j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
  }
  return out;
}

SupportMatrix initial_cyclic_matrix(std::size_t n, std::size_t k) {
  SupportMatrix m(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j <= i + n - k; ++j) m.set(i, j, true);
  }
  return m;
}

std::vector<std::size_t> column_weights(const SupportMatrix& m) {
  std::vector<std::size_t> weights(m.n(), 0);
  for (std::size_t i = 0; i < m.k(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) weights[j] += m.get(i, j);
  }
  return weights;
}

std::size_t row_union_size(const SupportMatrix& m, std::span<const std::size_t> rows) {
  std::size_t size = 0;
  for (std::size_t w = 0; w < m.words_per_row(); ++w) {
    std::uint64_t word = 0;
    for (std::size_t r : rows) word |= m.row_words(r)[w];
    size += std::popcount(word);
  }
  return size;
}

bool check_p1(const SupportMatrix& m) {
  const std::size_t target = m.n() - m.k() + 1;
  for (std::size_t i = 0; i < m.k(); ++i) {
    if (m.row_weight(i) != target) return false;
  }
  return true;
}

bool check_p2(const SupportMatrix& m) {
  const auto weights = column_weights(m);
  const auto [lo, hi] = std::minmax_element(weights.begin(), weights.end());
  return *hi - *lo <= 1;
}

namespace {

std::vector<std::size_t> rows_of_mask(std::uint64_t mask) {
  std::vector<std::size_t> rows;
  while (mask != 0) {
    rows.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return rows;
}

std::size_t mask_union_size(const SupportMatrix& m, std::uint64_t mask) {
  std::size_t size = 0;
  for (std::size_t w = 0; w < m.words_per_row(); ++w) {
    std::uint64_t word = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      word |= m.row_words(static_cast<std::size_t>(std::countr_zero(rest)))[w];
    }
    size += std::popcount(word);
  }
  return size;
}

bool mask_violates(const SupportMatrix& m, std::uint64_t mask) {
  return mask_union_size(m, mask) < m.n() - m.k() + static_cast<std::size_t>(std::popcount(mask));
}

P3Verdict verdict_for_mask(const SupportMatrix& m, std::uint64_t mask) {
  const auto size = static_cast<std::size_t>(std::popcount(mask));
  return {false, P3Witness{rows_of_mask(mask), mask_union_size(m, mask), m.n() - m.k() + size}};
}

// Serial reference: walks sizes upward, masks of one size in increasing order
// (Gosper's hack), and stops at the first violation.
P3Verdict p3_bruteforce_serial(const SupportMatrix& m) {
  const std::size_t k = m.k();
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::size_t size = 1; size <= k; ++size) {
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    while (mask < limit) {
      if (mask_violates(m, mask)) return verdict_for_mask(m, mask);
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return {};
}

// Parallel kernel: scans every mask and reduces on (popcount, mask).
P3Verdict p3_bruteforce_parallel(const SupportMatrix& m) {
  const std::int64_t limit = std::int64_t{1} << m.k();
  std::uint64_t best_key = UINT64_MAX;
#pragma omp parallel
  {
    std::uint64_t local = UINT64_MAX;
#pragma omp for schedule(static)
    for (std::int64_t mask = 1; mask < limit; ++mask) {
      const auto u = static_cast<std::uint64_t>(mask);
      const std::uint64_t key = (static_cast<std::uint64_t>(std::popcount(u)) << 32) | u;
      if (key < local && mask_violates(m, u)) local = key;
    }
#pragma omp critical(sparsemds_p3_reduce)
    best_key = std::min(best_key, local);
  }
  if (best_key == UINT64_MAX) return {};
  return verdict_for_mask(m, best_key & 0xffffffffULL);
}

std::vector<std::uint64_t> column_masks(const SupportMatrix& m) {
  std::vector<std::uint64_t> masks(m.n(), 0);
  for (std::size_t i = 0; i < m.k(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (m.get(i, j)) masks[j] |= std::uint64_t{1} << i;
    }
  }
  return masks;
}

bool hall_violated_by(std::span<const std::uint64_t> columns, std::size_t k, std::uint64_t mask) {
  const auto size = static_cast<std::size_t>(std::popcount(mask));
  if (size > k) return false;
  std::uint64_t rows = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    rows |= columns[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return static_cast<std::size_t>(std::popcount(rows)) < size;
}

}  // namespace

P3Verdict check_p3_bruteforce(const SupportMatrix& m, Execution exec) {
  if (m.k() > kMaxBruteForceRows) {
    throw TooLargeError("brute-force P3 check needs k <= " + std::to_string(kMaxBruteForceRows) +
                        ", got k = " + std::to_string(m.k()));
  }
  return exec == Execution::kSerial ? p3_bruteforce_serial(m) : p3_bruteforce_parallel(m);
}

P3Verdict check_p3_matching(const SupportMatrix& m) {
  if (!check_p1(m)) {
    throw PreconditionError("matching-based P3 check requires every row to have weight n - k + 1");
  }
  const std::size_t k = m.k();
  const std::size_t n = m.n();
  for (std::size_t i = 0; i < k; ++i) {
    // H_i: rows other than i on the left, columns outside R_i on the right.
    std::vector<std::size_t> left_rows;
    for (std::size_t r = 0; r < k; ++r) {
      if (r != i) left_rows.push_back(r);
    }
    std::vector<std::size_t> right_index(n, kUnmatched);
    std::size_t right_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.get(i, j)) right_index[j] = right_count++;
    }
    BipartiteGraph h(left_rows.size(), right_count);
    for (std::size_t l = 0; l < left_rows.size(); ++l) {
      for (std::size_t j = 0; j < n; ++j) {
        if (right_index[j] != kUnmatched && m.get(left_rows[l], j)) h.add_edge(l, right_index[j]);
      }
    }
    const Matching matching = max_bipartite_matching(h);
    if (matching.size == left_rows.size()) continue;

    std::vector<std::size_t> rows{i};
    for (std::size_t l : hall_violator(h, matching)) rows.push_back(left_rows[l]);
    std::sort(rows.begin(), rows.end());
    P3Witness witness{rows, row_union_size(m, rows), n - k + rows.size()};
    if (witness.union_size >= witness.required) {
      throw InternalError("deficiency set from row " + std::to_string(i) +
                          " does not violate the union bound");
    }
    return {false, std::move(witness)};
  }
  return {};
}

bool check_hall_columns(const SupportMatrix& m, Execution exec) {
  if (m.n() > kMaxHallColumns) {
    throw TooLargeError("column Hall check needs n <= " + std::to_string(kMaxHallColumns) +
                        ", got n = " + std::to_string(m.n()));
  }
  const auto columns = column_masks(m);
  const std::size_t k = m.k();
  const std::int64_t limit = std::int64_t{1} << m.n();
  if (exec == Execution::kSerial) {
    for (std::int64_t mask = 1; mask < limit; ++mask) {
      if (hall_violated_by(columns, k, static_cast<std::uint64_t>(mask))) return false;
    }
    return true;
  }
  bool violated = false;
#pragma omp parallel for schedule(static) reduction(|| : violated)
  for (std::int64_t mask = 1; mask < limit; ++mask) {
    if (!violated) violated = hall_violated_by(columns, k, static_cast<std::uint64_t>(mask));
  }
  return !violated;
}

bool check_all_k_subsets_matchable(const SupportMatrix& m, Execution exec) {
  const std::size_t k = m.k();
  const std::size_t n = m.n();
  if (binomial(n, k) > kMaxMatchableSubsets) {
    throw TooLargeError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds " +
                        std::to_string(kMaxMatchableSubsets) + " column subsets");
  }
  const auto unmatchable = detail::first_combination_where(n, k, exec, [&m, k] {
    return [&m, k](std::span<const std::size_t> columns) {
      BipartiteGraph g(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
          if (m.get(i, columns[c])) g.add_edge(i, c);
        }
      }
      return max_bipartite_matching(g).size < k;
    };
  });
  return !unmatchable.has_value();
}

BipartiteGraph to_bipartite_graph(const SupportMatrix& m) {
  BipartiteGraph g(m.k(), m.n());
  for (std::size_t i = 0; i < m.k(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (m.get(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

SupportMatrix parse_sm(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(".sm: empty input");
  const auto header = detail::split_fields(lines[0], ' ');
  if (header.size() != 2) throw ParseError(".sm: header must be \"k n\"");
  const std::uint64_t k = detail::parse_u64(header[0]);
  const std::uint64_t n = detail::parse_u64(header[1]);
  if (k == 0 || k > n) throw ParseError(".sm: header needs 1 <= k <= n");
  if (lines.size() != k + 1) {
    throw ParseError(".sm: expected " + std::to_string(k) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::string> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != n) {
      throw ParseError(".sm: row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) +
                       " characters, expected " + std::to_string(n));
    }
    rows.emplace_back(lines[i]);
  }
  return SupportMatrix::from_strings(rows);
}

std::string format_sm(const SupportMatrix& m) {
  return std::to_string(m.k()) + " " + std::to_string(m.n()) + "\n" + m.to_string() + "\n";
}

SupportMatrix read_sm_file(const std::string& path) { return parse_sm(detail::read_text_file(path)); }

void write_sm_file(const std::string& path, const SupportMatrix& m) {
  detail::write_text_file(path, format_sm(m));
}

}  // namespace sparsemds
