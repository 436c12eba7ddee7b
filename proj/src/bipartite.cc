// Copyright 2026 The stem-match Authors.
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

#include "stem_match/bipartite.h"

#include <limits>
#include <queue>
#include <stdexcept>

namespace stem_match {
namespace {

constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<uint32_t>>& adj, size_t right_count)
      : adj_(adj),
        pair_left_(adj.size(), kUnmatched),
        pair_right_(right_count, kUnmatched),
        dist_(adj.size(), kInf),
        next_edge_(adj.size(), 0) {}

  Matching run() {
    size_t size = 0;
    while (bfs()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (uint32_t u = 0; u < adj_.size(); ++u) {
        if (pair_left_[u] == kUnmatched && dfs(u)) ++size;
      }
    }
    return {size, std::move(pair_left_), std::move(pair_right_)};
  }

 private:
  // Layers free left vertices at distance 0; true if an augmenting path exists.
  bool bfs() {
    std::queue<uint32_t> q;
    for (uint32_t u = 0; u < adj_.size(); ++u) {
      if (pair_left_[u] == kUnmatched) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const uint32_t u = q.front();
      q.pop();
      for (uint32_t v : adj_[u]) {
        const uint32_t w = pair_right_[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(uint32_t u) {
    for (size_t& i = next_edge_[u]; i < adj_[u].size(); ++i) {
      const uint32_t v = adj_[u][i];
      const uint32_t w = pair_right_[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        pair_left_[u] = v;
        pair_right_[v] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const std::vector<std::vector<uint32_t>>& adj_;
  std::vector<uint32_t> pair_left_;
  std::vector<uint32_t> pair_right_;
  std::vector<uint32_t> dist_;
  std::vector<size_t> next_edge_;
};

}  // namespace

Matching maximum_matching(const std::vector<std::vector<uint32_t>>& adjacency,
                          size_t right_count) {
  for (const auto& edges : adjacency) {
    for (uint32_t v : edges) {
      if (v >= right_count) throw std::out_of_range("edge to a missing right vertex");
    }
  }
  return HopcroftKarp(adjacency, right_count).run();
}

}  // namespace stem_match
