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

#ifndef STEM_MATCH_MATCHER_H_
#define STEM_MATCH_MATCHER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "stem_match/profiles.h"
#include "stem_match/similarity.h"

namespace stem_match {

class MatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr size_t kDefaultTopK = 5;
inline constexpr size_t kEvaluatedRanks = 5;

struct RankedEntry {
  std::string candidate_id;
  SimilarityBreakdown scores;

  bool operator==(const RankedEntry&) const = default;
};

// Sorted by combined score descending, scored candidates ahead of no-signal
// ones, ties by candidate id ascending.
struct MatchResult {
  std::string student_id;
  std::vector<RankedEntry> ranked;

  bool operator==(const MatchResult&) const = default;
};

// Strict weak order used for ranking.
bool ranks_before(const RankedEntry& a, const RankedEntry& b);

// Scores students against a fixed pool of role models. Interest and
// location strings are decoded and deduplicated once up front; rank() is
// const and may be called concurrently.
class Ranker {
 public:
  Ranker(std::vector<AttributeProfile> candidates, FuzzyThreshold t = {});
  ~Ranker();
  Ranker(Ranker&&) noexcept;
  Ranker& operator=(Ranker&&) noexcept;

  // Breakdown for every candidate, in pool order. Each entry equals
  // combined_score(student, candidate, t).
  std::vector<SimilarityBreakdown> score_all(const AttributeProfile& student) const;

  // Top min(k, pool size) candidates.
  MatchResult rank(const AttributeProfile& student, size_t k = kDefaultTopK) const;

  size_t size() const;
  FuzzyThreshold threshold() const;

 private:
  struct Index;
  std::unique_ptr<Index> index_;
};

// Throws MatchError on an empty candidate list or k == 0.
MatchResult rank(const AttributeProfile& student,
                 const std::vector<AttributeProfile>& candidates, size_t k = kDefaultTopK,
                 FuzzyThreshold t = {});

// One result per student, in input order. `threads` == 0 picks the hardware
// concurrency; output does not depend on it.
std::vector<MatchResult> match_corpus(const std::vector<AttributeProfile>& students,
                                      const std::vector<AttributeProfile>& candidates,
                                      size_t k = kDefaultTopK, FuzzyThreshold t = {},
                                      unsigned threads = 1);

nlohmann::json to_json(const MatchResult& r);
MatchResult match_result_from_json(const nlohmann::json& j);
std::vector<MatchResult> load_matches(const std::filesystem::path& path);

enum class EvalLevel { kCityAll, kStateAll, kCityTop10, kStateTop10 };

std::string_view to_string(EvalLevel l);
std::optional<EvalLevel> parse_eval_level(std::string_view s);
inline constexpr std::array<EvalLevel, 4> kAllEvalLevels{
    EvalLevel::kCityAll, EvalLevel::kStateAll, EvalLevel::kCityTop10, EvalLevel::kStateTop10};

// The ten cities most role models come from.
const std::vector<std::string>& default_top_cities();

// Manually determined attributes of one person. Absent fields mean the
// annotator could not determine them.
struct GroundTruthAnnotation {
  enum class Kind { kStudent, kCandidate };

  std::string subject_id;
  Kind kind = Kind::kStudent;
  std::optional<Gender> gender;
  std::optional<Race> race;
  std::optional<std::string> city;
  std::optional<std::string> state;
  bool is_stem_role_model = false;  // candidates only
  // Synthetic data: the candidate planted as this student's ideal match.
  std::optional<std::string> planted_candidate_id;

  bool operator==(const GroundTruthAnnotation&) const = default;
};

nlohmann::json to_json(const GroundTruthAnnotation& a);
GroundTruthAnnotation annotation_from_json(const nlohmann::json& j);

struct AnnotationSet {
  std::unordered_map<std::string, GroundTruthAnnotation> students;
  std::unordered_map<std::string, GroundTruthAnnotation> candidates;

  void add(GroundTruthAnnotation a);
};

AnnotationSet load_annotations(const std::filesystem::path& path);

// Correct when the candidate is a STEM role model and shares the student's
// gender, race and city (city levels) or state (state levels). A student
// field the annotator could not determine makes every match incorrect.
bool is_correct_match(const GroundTruthAnnotation& student,
                      const GroundTruthAnnotation& candidate, EvalLevel level);

struct AccuracyReport {
  EvalLevel level = EvalLevel::kCityAll;
  size_t cohort_size = 0;
  // Index n-1: students with at least n correct matches in their top 5.
  std::array<size_t, kEvaluatedRanks> students_at_least{};
  std::array<double, kEvaluatedRanks> accuracy{};
  // Cohort students whose whole list carried no comparable attribute.
  size_t no_signal_students = 0;
};

// Matching accuracy over the results whose student belongs to the level's
// cohort (every student, or those annotated in one of `top_cities`).
// Throws MatchError listing ids when a student or ranked candidate has no
// annotation row.
AccuracyReport evaluate(const std::vector<MatchResult>& results,
                        const AnnotationSet& annotations, EvalLevel level,
                        const std::vector<std::string>& top_cities = default_top_cities());

nlohmann::json to_json(const AccuracyReport& r);

}  // namespace stem_match

#endif  // STEM_MATCH_MATCHER_H_
