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

#ifndef STEM_MATCH_BIPARTITE_H_
#define STEM_MATCH_BIPARTITE_H_

#include <cstdint>
#include <vector>

namespace stem_match {

inline constexpr uint32_t kUnmatched = UINT32_MAX;

struct Matching {
  size_t size = 0;
  std::vector<uint32_t> left_to_right;  // kUnmatched when free
  std::vector<uint32_t> right_to_left;
};

// Maximum-cardinality matching by Hopcroft-Karp. `adjacency[u]` lists the
// right vertices (< right_count) adjacent to left vertex u.
Matching maximum_matching(const std::vector<std::vector<uint32_t>>& adjacency,
                          size_t right_count);

}  // namespace stem_match

#endif  // STEM_MATCH_BIPARTITE_H_
