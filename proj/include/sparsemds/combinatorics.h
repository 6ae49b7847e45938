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

#ifndef SPARSEMDS_COMBINATORICS_H_
#define SPARSEMDS_COMBINATORICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparsemds/random.h"

namespace sparsemds {

// C(n, k). Throws TooLargeError if the value does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Advances `combination` (strictly increasing indices in [0, n)) to its
// lexicographic successor. Returns false after the last one.
bool next_combination(std::span<std::size_t> combination, std::size_t n);

// Writes the k-subset of [0, n) with lexicographic rank `rank` into `out`
// (out.size() == k).
void unrank_combination(std::size_t n, std::uint64_t rank, std::span<std::size_t> out);

// Lexicographic rank of a k-subset of [0, n); inverse of unrank_combination.
std::uint64_t rank_combination(std::size_t n, std::span<const std::size_t> combination);

namespace detail {

// Scans all k-subsets of [0, n) and returns the smallest lexicographic rank
// whose subset satisfies the predicate. `make_checker()` is invoked once per
// work block and must return a callable bool(std::span<const std::size_t>),
// which lets each block own its scratch buffers.
template <class MakeChecker>
std::optional<std::uint64_t> first_combination_where(std::size_t n, std::size_t k, Execution exec,
                                                     MakeChecker&& make_checker) {
  const std::uint64_t total = binomial(n, k);
  if (total == 0) return std::nullopt;
  if (k == 0) {
    auto check = make_checker();
    return check(std::span<const std::size_t>{}) ? std::optional<std::uint64_t>(0) : std::nullopt;
  }

  if (exec == Execution::kSerial) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    auto check = make_checker();
    std::uint64_t rank = 0;
    do {
      if (check(std::span<const std::size_t>(comb))) return rank;
      ++rank;
    } while (next_combination(comb, n));
    return std::nullopt;
  }

  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::uint64_t best = total;  // sentinel: nothing found
#pragma omp parallel
  {
    std::vector<std::size_t> comb(k);
    auto check = make_checker();
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      const std::uint64_t start = static_cast<std::uint64_t>(b) * kBlock;
      std::uint64_t current_best;
#pragma omp atomic read
      current_best = best;
      if (start >= current_best) continue;
      const std::uint64_t stop = start + kBlock < total ? start + kBlock : total;
      unrank_combination(n, start, comb);
      for (std::uint64_t rank = start; rank < stop; ++rank) {
        if (check(std::span<const std::size_t>(comb))) {
#pragma omp critical(sparsemds_first_combination)
          if (rank < best) best = rank;
          break;
        }
        next_combination(comb, n);
      }
    }
  }
  if (best == total) return std::nullopt;
  return best;
}

}  // namespace detail
}  // namespace sparsemds

#endif  // SPARSEMDS_COMBINATORICS_H_
