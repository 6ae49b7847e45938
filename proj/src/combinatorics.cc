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

#include "sparsemds/combinatorics.h"

#include <stdexcept>
#include <string>

#include "sparsemds/errors.h"

namespace sparsemds {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // result * (n - i) / (i + 1) is exact at every step.
    result = result * (n - i) / (i + 1);
    if (result > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw TooLargeError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

bool next_combination(std::span<std::size_t> combination, std::size_t n) {
  const std::size_t k = combination.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combination[i] < n - k + i) {
      ++combination[i];
      for (std::size_t j = i + 1; j < k; ++j) combination[j] = combination[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void unrank_combination(std::size_t n, std::uint64_t rank, std::span<std::size_t> out) {
  const std::size_t k = out.size();
  if (rank >= binomial(n, k)) throw std::out_of_range("unrank_combination: rank out of range");
  std::size_t candidate = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++candidate) {
      const std::uint64_t with_candidate = binomial(n - 1 - candidate, k - 1 - i);
      if (rank < with_candidate) break;
      rank -= with_candidate;
    }
    out[i] = candidate++;
  }
}

std::uint64_t rank_combination(std::size_t n, std::span<const std::size_t> combination) {
  const std::size_t k = combination.size();
  std::uint64_t rank = 0;
  std::size_t candidate = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (; candidate < combination[i]; ++candidate) rank += binomial(n - 1 - candidate, k - 1 - i);
    ++candidate;
  }
  return rank;
}

}  // namespace sparsemds
