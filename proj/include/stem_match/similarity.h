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

#ifndef STEM_MATCH_SIMILARITY_H_
#define STEM_MATCH_SIMILARITY_H_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stem_match/profiles.h"

namespace stem_match {

// Smallest lev_similarity at which two interest strings count as the same
// interest.
class FuzzyThreshold {
 public:
  static constexpr double kDefault = 0.8;

  constexpr FuzzyThreshold() = default;
  explicit FuzzyThreshold(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::invalid_argument("fuzzy threshold must lie in [0, 1]");
    }
  }
  constexpr double value() const { return value_; }

 private:
  double value_ = kDefault;
};

// Edit distance over Unicode scalar values (insert, delete, substitute).
size_t levenshtein(std::u32string_view a, std::u32string_view b);
size_t levenshtein(std::string_view a, std::string_view b);

// (|a| + |b| - lev(a, b)) / (|a| + |b|) with lengths in scalar values.
// Two empty strings are defined to be identical (1.0).
double lev_similarity(std::u32string_view a, std::u32string_view b);
double lev_similarity(std::string_view a, std::string_view b);

// lev_similarity(a, b) >= threshold, skipping the edit distance when the
// lengths alone rule it out.
bool lev_similar(std::u32string_view a, std::u32string_view b, double threshold);

// 1 if equal, 0 if not, nullopt if either side is missing.
template <typename T>
std::optional<double> categorical_similarity(const std::optional<T>& a,
                                             const std::optional<T>& b) {
  if (!a || !b) return std::nullopt;
  return *a == *b ? 1.0 : 0.0;
}

std::optional<double> location_similarity(const std::optional<std::string>& a,
                                          const std::optional<std::string>& b);

// Size of a maximum one-to-one pairing between the sets where a pair is
// allowed when its lev_similarity reaches the threshold.
size_t fuzzy_overlap(const std::set<std::string>& a, const std::set<std::string>& b,
                     FuzzyThreshold t = {});

// overlap / (|a| + |b| - overlap); nullopt when either set is empty.
std::optional<double> interest_similarity(const std::set<std::string>& a,
                                          const std::set<std::string>& b,
                                          FuzzyThreshold t = {});

struct SimilarityBreakdown {
  std::optional<double> gender;
  std::optional<double> race;
  std::optional<double> location;
  std::optional<double> interest;
  double combined = 0.0;
  // No component could be compared; combined is 0.
  bool no_signal = true;

  bool operator==(const SimilarityBreakdown&) const = default;
};

// Arithmetic mean of the present components.
SimilarityBreakdown combine(std::optional<double> gender, std::optional<double> race,
                            std::optional<double> location, std::optional<double> interest);

SimilarityBreakdown combined_score(const AttributeProfile& student,
                                   const AttributeProfile& role_model,
                                   FuzzyThreshold t = {});

}  // namespace stem_match

#endif  // STEM_MATCH_SIMILARITY_H_
