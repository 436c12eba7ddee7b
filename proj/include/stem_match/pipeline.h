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

#ifndef STEM_MATCH_PIPELINE_H_
#define STEM_MATCH_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stem_match/attributes.h"
#include "stem_match/classifier.h"
#include "stem_match/labeler.h"
#include "stem_match/matcher.h"
#include "stem_match/rolemodel.h"

namespace stem_match {

namespace fs = std::filesystem;

// A stage failure, tagged with the stage that raised it.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& cause)
      : std::runtime_error(stage + ": " + cause), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Optional overrides for the bundled reference tables.
struct Resources {
  std::optional<fs::path> rules;
  std::optional<fs::path> taxonomy;
  std::optional<fs::path> majors;
  std::optional<fs::path> names;

  RuleSet load_rules() const;
  IndustryTaxonomy load_taxonomy() const;
  StemMajorList load_majors() const;
  NameTable load_names() const;
};

// Each stage reads and writes files so the CLI and the orchestrator share
// one code path. Per-record problems go to `log` and do not stop a stage.

struct LabelStageResult {
  size_t students = 0;
  size_t rejected = 0;
  LabelPartition partition;
};
LabelStageResult label_stage(const fs::path& students, const RuleSet& rules,
                             const fs::path& out, std::ostream& log);

struct ClassifyOptions {
  TrainConfig train;
  int folds = 10;
  bool with_retweet = false;
};
struct ClassifyStageResult {
  size_t training_examples = 0;
  double cv_accuracy = 0.0;
  size_t predicted_college = 0;
  size_t predicted_non_college = 0;
};
// Trains on the college/non-college rows of `labels`, writes the model as
// text to `model_out` and a prediction for every student to `out`.
ClassifyStageResult classify_stage(const fs::path& labels, const fs::path& students,
                                   const fs::path& out, const fs::path& model_out,
                                   const ClassifyOptions& options, std::ostream& log);

RoleModelSummary identify_stage(const fs::path& candidates, const IndustryTaxonomy& taxonomy,
                                const StemMajorList& majors, const fs::path& out,
                                std::ostream& log);

enum class ProfileKind { kStudent, kCandidate };
struct AttributesOptions {
  ProfileKind kind = ProfileKind::kStudent;
  // Students only: keep those predicted college in this file.
  std::optional<fs::path> predicted;
  // Fill predictor outputs missing from the input with name-table lookups.
  const NameTable* names = nullptr;
};
size_t attributes_stage(const fs::path& in, const fs::path& out,
                        const AttributesOptions& options, std::ostream& log);

struct RankOptions {
  size_t k = kDefaultTopK;
  double fuzzy_threshold = 0.8;
  unsigned threads = 1;
};
size_t rank_stage(const fs::path& student_profiles, const fs::path& rolemodel_profiles,
                  const fs::path& out, const RankOptions& options, std::ostream& log);

AccuracyReport evaluate_stage(const fs::path& matches, const fs::path& annotations,
                              EvalLevel level, const fs::path& out);

// One page per match result, greeting each student by display name.
size_t pages_stage(const fs::path& matches, const fs::path& students,
                   const fs::path& candidates, const fs::path& out_dir,
                   const std::optional<std::string>& survey_url, std::ostream& log);

struct PipelineConfig {
  fs::path students;
  fs::path candidates;
  std::optional<fs::path> annotations;
  fs::path out_dir;
  Resources resources;
  ClassifyOptions classify;
  RankOptions rank;
  std::vector<EvalLevel> levels{kAllEvalLevels.begin(), kAllEvalLevels.end()};
  std::optional<std::string> survey_url;
  bool use_name_table = true;
  // Re-run every stage even when its inputs are unchanged.
  bool force = false;
};

// Relative paths resolve against `base`, normally the config file's directory.
PipelineConfig pipeline_config_from_json(const nlohmann::json& j, const fs::path& base);
PipelineConfig load_pipeline_config(const fs::path& path);

struct PipelineSummary {
  std::vector<std::string> ran;
  std::vector<std::string> skipped;
};

// Runs label, classify, identify, attributes, rank, evaluate and pages in
// order under `out_dir`. A stage whose inputs and settings match the
// fingerprint in pipeline_state.json and whose outputs exist is skipped.
PipelineSummary run_pipeline(const PipelineConfig& config, std::ostream& log);

// 64-bit FNV-1a.
uint64_t fnv1a(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace stem_match

#endif  // STEM_MATCH_PIPELINE_H_
