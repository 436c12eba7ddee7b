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

#ifndef STEM_MATCH_ATTRIBUTES_H_
#define STEM_MATCH_ATTRIBUTES_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stem_match/profiles.h"

namespace stem_match {

struct ResolvedAttribute {
  std::string value;
  std::string source;  // predictor source, or the profile field read
  double accuracy = 1.0;

  bool operator==(const ResolvedAttribute&) const = default;
};

// Highest-accuracy non-null prediction for the attribute. Equal accuracies
// fall back to source priority name-gender > face > name-demographics, then
// to the value's spelling, so the pick never depends on input order.
std::optional<ResolvedAttribute> resolve_gender(std::span<const PredictorOutput> outputs);
std::optional<ResolvedAttribute> resolve_race(std::span<const PredictorOutput> outputs);

// Case-folded, trimmed, whitespace-collapsed; nullopt if nothing is left.
std::optional<std::string> resolve_location(std::string_view raw);

// Unique hashtag bodies over all tweets, case-folded.
std::set<std::string> extract_student_interests(const StudentRecord& record);
// interests_raw and skills_raw merged, case-folded and deduplicated.
std::set<std::string> extract_candidate_interests(const CandidateRecord& record);

AttributeProfile build_profile(const StudentRecord& record);
AttributeProfile build_profile(const CandidateRecord& record);

// Offline name lookup standing in for the name-based predictors. Given
// names yield name-gender predictions; surnames yield name-demographics
// race predictions.
class NameTable {
 public:
  struct Entry {
    std::optional<std::string> gender;
    std::optional<double> gender_accuracy;
    std::optional<std::string> race;
    std::optional<double> race_accuracy;
  };

  // `names.jsonl`: {"name": "...", "kind": "given"|"surname", "gender": ...,
  // "gender_accuracy": ..., "race": ..., "race_accuracy": ...}
  static NameTable parse(std::istream& in);
  static NameTable load(const std::filesystem::path& path);
  static const NameTable& defaults();

  void add_given(std::string_view name, Entry e);
  void add_surname(std::string_view name, Entry e);

  // Predictions for a display/full name. First token is the given name,
  // last token (when there are two or more) the surname.
  std::vector<PredictorOutput> predict(std::string_view full_name) const;

  size_t given_count() const { return given_.size(); }
  size_t surname_count() const { return surnames_.size(); }
  std::vector<std::string> given_names() const;
  std::vector<std::string> surnames() const;
  const Entry* find_given(std::string_view name) const;
  const Entry* find_surname(std::string_view name) const;

 private:
  std::unordered_map<std::string, Entry> given_;
  std::unordered_map<std::string, Entry> surnames_;
};

// Adds the table's predictions for every source not already present in
// `outputs`.
std::vector<PredictorOutput> augment_predictions(std::vector<PredictorOutput> outputs,
                                                 std::string_view full_name,
                                                 const NameTable& names);

}  // namespace stem_match

#endif  // STEM_MATCH_ATTRIBUTES_H_
