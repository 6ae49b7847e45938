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

#include "sparsemds/matching.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sparsemds {

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count)
    : right_count_(right_count), adjacency_(left_count) {}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right) {
  if (left >= adjacency_.size() || right >= right_count_) {
    throw std::out_of_range("BipartiteGraph::add_edge: endpoint out of range");
  }
  adjacency_[left].push_back(right);
}

namespace {

constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& graph)
      : graph_(graph),
        left_mate_(graph.left_count(), kUnmatched),
        right_mate_(graph.right_count(), kUnmatched),
        dist_(graph.left_count()),
        next_edge_(graph.left_count()) {}

  Matching run() {
    std::size_t size = 0;
    while (bfs()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (std::size_t u = 0; u < graph_.left_count(); ++u) {
        if (left_mate_[u] == kUnmatched && dfs(u)) ++size;
      }
    }
    return {size, std::move(left_mate_), std::move(right_mate_)};
  }

 private:
  // Layers the free left vertices at distance 0; true if some free right
  // vertex is reachable.
  bool bfs() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < graph_.left_count(); ++u) {
      if (left_mate_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInfinity;
      }
    }
    bool found_free = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : graph_.neighbors(u)) {
        const std::size_t w = right_mate_[v];
        if (w == kUnmatched) {
          found_free = true;
        } else if (dist_[w] == kInfinity) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found_free;
  }

  bool dfs(std::size_t u) {
    const auto& adj = graph_.neighbors(u);
    for (std::size_t& e = next_edge_[u]; e < adj.size(); ++e) {
      const std::size_t v = adj[e];
      const std::size_t w = right_mate_[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        left_mate_[u] = v;
        right_mate_[v] = u;
        return true;
      }
    }
    dist_[u] = kInfinity;
    return false;
  }

  const BipartiteGraph& graph_;
  std::vector<std::size_t> left_mate_;
  std::vector<std::size_t> right_mate_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace

Matching max_bipartite_matching(const BipartiteGraph& graph) { return HopcroftKarp(graph).run(); }

std::vector<std::size_t> hall_violator(const BipartiteGraph& graph, const Matching& matching) {
  std::vector<bool> seen(graph.left_count(), false);
  std::deque<std::size_t> queue;
  for (std::size_t u = 0; u < graph.left_count(); ++u) {
    if (matching.left_mate[u] == kUnmatched) {
      seen[u] = true;
      queue.push_back(u);
    }
  }
  if (queue.empty()) return {};
  // Non-matching edges go left to right, matching edges right to left. Every
  // right vertex reached is matched (the matching is maximum), so the
  // neighbourhood of the reached left set is matched into it.
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : graph.neighbors(u)) {
      const std::size_t w = matching.right_mate[v];
      if (w != kUnmatched && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> result;
  for (std::size_t u = 0; u < graph.left_count(); ++u) {
    if (seen[u]) result.push_back(u);
  }
  return result;
}

}  // namespace sparsemds
