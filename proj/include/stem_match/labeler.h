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

#ifndef STEM_MATCH_LABELER_H_
#define STEM_MATCH_LABELER_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stem_match/profiles.h"

namespace stem_match {

enum class Label { kCollege, kNonCollege, kUnlabeled };

std::string_view to_string(Label l);
std::optional<Label> parse_label(std::string_view s);

struct LabelRule {
  std::string pattern;  // ECMAScript regex, matched case-insensitively
  Label label = Label::kCollege;
  std::string description;
};

// An ordered set of compiled rules.
class RuleSet {
 public:
  RuleSet() = default;
  // Throws ValidationError on a pattern that does not compile or a rule
  // whose label is kUnlabeled.
  explicit RuleSet(std::vector<LabelRule> rules);

  // `rules.jsonl`: {"pattern": "...", "label": "college"|"non-college", "description": "..."}
  static RuleSet parse(std::istream& in);
  static RuleSet load(const std::filesystem::path& path);
  static const RuleSet& defaults();

  void add(LabelRule rule);

  size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const LabelRule& rule(size_t i) const { return rules_[i].rule; }
  bool matches(size_t i, std::string_view text) const;

 private:
  struct Compiled {
    LabelRule rule;
    std::regex regex;
  };
  std::vector<Compiled> rules_;
};

// value == kUnlabeled exactly when matched_rules is empty. When both rule
// kinds fire, the record is unlabeled and the descriptions of every rule
// that fired go to conflicting_rules instead.
struct WeakLabel {
  Label value = Label::kUnlabeled;
  std::vector<std::string> matched_rules;
  std::vector<std::string> conflicting_rules;

  bool operator==(const WeakLabel&) const = default;
};

// Rules are tried against the bio and each tweet separately.
WeakLabel label_student(const StudentRecord& record, const RuleSet& rules);

struct LabelPartition {
  std::vector<std::string> college;
  std::vector<std::string> non_college;
  std::vector<std::string> unlabeled;
};

struct CorpusLabels {
  std::vector<WeakLabel> labels;  // parallel to the input records
  LabelPartition partition;
};

CorpusLabels label_corpus(const std::vector<StudentRecord>& records, const RuleSet& rules);

// One row of labels.jsonl. `override` is the manual review column: when
// set it replaces the rule-derived label.
struct LabelRow {
  std::string id;
  WeakLabel weak;
  std::optional<Label> override_label;

  Label effective() const { return override_label.value_or(weak.value); }
};

nlohmann::json to_json(const LabelRow& row);
LabelRow label_row_from_json(const nlohmann::json& j);
std::vector<LabelRow> load_labels(const std::filesystem::path& path);

}  // namespace stem_match

#endif  // STEM_MATCH_LABELER_H_
