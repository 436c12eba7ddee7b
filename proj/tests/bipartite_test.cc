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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

namespace stem_match {
namespace {

void expect_consistent(const Matching& m, const std::vector<std::vector<uint32_t>>& adj) {
  size_t count = 0;
  for (uint32_t u = 0; u < m.left_to_right.size(); ++u) {
    const uint32_t v = m.left_to_right[u];
    if (v == kUnmatched) continue;
    ++count;
    EXPECT_EQ(m.right_to_left[v], u);
    EXPECT_NE(std::find(adj[u].begin(), adj[u].end(), v), adj[u].end());
  }
  EXPECT_EQ(count, m.size);
}

TEST(MaximumMatching, SmallCases) {
  EXPECT_EQ(maximum_matching({}, 0).size, 0u);
  EXPECT_EQ(maximum_matching({{}, {}}, 3).size, 0u);
  // Greedy would take 0-0 and strand vertex 1.
  const std::vector<std::vector<uint32_t>> adj{{0, 1}, {0}};
  const Matching m = maximum_matching(adj, 2);
  EXPECT_EQ(m.size, 2u);
  expect_consistent(m, adj);
}

TEST(MaximumMatching, RejectsOutOfRangeEdges) {
  EXPECT_THROW(maximum_matching({{2}}, 2), std::out_of_range);
}

TEST(MaximumMatching, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 500; ++round) {
    const size_t n = rng() % 7, m = rng() % 7;
    const double density = std::uniform_real_distribution<double>(0, 1)(rng);
    std::vector<std::vector<bool>> allowed(n, std::vector<bool>(m, false));
    std::vector<std::vector<uint32_t>> adj(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < m; ++j) {
        if (std::uniform_real_distribution<double>(0, 1)(rng) < density) {
          allowed[i][j] = true;
          adj[i].push_back(static_cast<uint32_t>(j));
        }
      }
    }
    const Matching got = maximum_matching(adj, m);
    EXPECT_EQ(got.size, oracle::exhaustive_matching(allowed));
    expect_consistent(got, adj);
  }
}

}  // namespace
}  // namespace stem_match
