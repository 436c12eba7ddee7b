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

#include "stem_match/similarity.h"

#include <algorithm>
#include <numeric>

#include "stem_match/bipartite.h"
#include "stem_match/text.h"

namespace stem_match {

size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();
  std::vector<size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      const size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(text::decode_utf8(a), text::decode_utf8(b));
}

double lev_similarity(std::u32string_view a, std::u32string_view b) {
  const size_t total = a.size() + b.size();
  if (total == 0) return 1.0;
  return static_cast<double>(total - levenshtein(a, b)) / static_cast<double>(total);
}

double lev_similarity(std::string_view a, std::string_view b) {
  return lev_similarity(text::decode_utf8(a), text::decode_utf8(b));
}

bool lev_similar(std::u32string_view a, std::u32string_view b, double threshold) {
  const size_t total = a.size() + b.size();
  if (total == 0) return 1.0 >= threshold;
  // lev >= |len(a) - len(b)|, so similarity <= 2 min / total.
  const size_t shorter = std::min(a.size(), b.size());
  const double bound = static_cast<double>(2 * shorter) / static_cast<double>(total);
  if (bound < threshold) return false;
  return lev_similarity(a, b) >= threshold;
}

std::optional<double> location_similarity(const std::optional<std::string>& a,
                                          const std::optional<std::string>& b) {
  if (!a || !b) return std::nullopt;
  return lev_similarity(*a, *b);
}

size_t fuzzy_overlap(const std::set<std::string>& a, const std::set<std::string>& b,
                     FuzzyThreshold t) {
  std::vector<std::u32string> right;
  right.reserve(b.size());
  for (const auto& s : b) right.push_back(text::decode_utf8(s));
  std::vector<std::vector<uint32_t>> adjacency;
  adjacency.reserve(a.size());
  for (const auto& s : a) {
    const std::u32string left = text::decode_utf8(s);
    auto& edges = adjacency.emplace_back();
    for (uint32_t j = 0; j < right.size(); ++j) {
      if (lev_similar(left, right[j], t.value())) edges.push_back(j);
    }
  }
  return maximum_matching(adjacency, right.size()).size;
}

std::optional<double> interest_similarity(const std::set<std::string>& a,
                                          const std::set<std::string>& b, FuzzyThreshold t) {
  if (a.empty() || b.empty()) return std::nullopt;
  const size_t m = fuzzy_overlap(a, b, t);
  return static_cast<double>(m) / static_cast<double>(a.size() + b.size() - m);
}

SimilarityBreakdown combine(std::optional<double> gender, std::optional<double> race,
                            std::optional<double> location, std::optional<double> interest) {
  SimilarityBreakdown out{gender, race, location, interest, 0.0, true};
  double sum = 0.0;
  int present = 0;
  for (const auto& c : {gender, race, location, interest}) {
    if (!c) continue;
    sum += *c;
    ++present;
  }
  if (present > 0) {
    out.combined = sum / present;
    out.no_signal = false;
  }
  return out;
}

SimilarityBreakdown combined_score(const AttributeProfile& student,
                                   const AttributeProfile& role_model, FuzzyThreshold t) {
  return combine(categorical_similarity(student.gender, role_model.gender),
                 categorical_similarity(student.race, role_model.race),
                 location_similarity(student.location, role_model.location),
                 interest_similarity(student.interests, role_model.interests, t));
}

}  // namespace stem_match
