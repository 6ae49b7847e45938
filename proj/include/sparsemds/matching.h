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

#ifndef SPARSEMDS_MATCHING_H_
#define SPARSEMDS_MATCHING_H_

#include <cstddef>
#include <limits>
#include <vector>

namespace sparsemds {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

// Bipartite graph with adjacency lists from left to right vertices.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left_count, std::size_t right_count);

  // Throws std::out_of_range if either endpoint is out of range.
  void add_edge(std::size_t left, std::size_t right);

  std::size_t left_count() const { return adjacency_.size(); }
  std::size_t right_count() const { return right_count_; }
  const std::vector<std::size_t>& neighbors(std::size_t left) const { return adjacency_[left]; }

 private:
  std::size_t right_count_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct Matching {
  std::size_t size = 0;
  std::vector<std::size_t> left_mate;   // kUnmatched if free
  std::vector<std::size_t> right_mate;  // kUnmatched if free
};

// Maximum-cardinality matching (Hopcroft-Karp).
Matching max_bipartite_matching(const BipartiteGraph& graph);

// Left vertices reachable by alternating paths from the free left vertices of
// a maximum matching, sorted ascending. Empty iff the matching saturates the
// left side; otherwise its neighbourhood is strictly smaller than itself
// (exactly |set| - #free left vertices).
std::vector<std::size_t> hall_violator(const BipartiteGraph& graph, const Matching& matching);

}  // namespace sparsemds

#endif  // SPARSEMDS_MATCHING_H_
