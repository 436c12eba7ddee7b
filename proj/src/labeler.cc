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

#include "stem_match/labeler.h"

#include <fstream>

namespace stem_match {

using nlohmann::json;

std::string_view to_string(Label l) {
  switch (l) {
    case Label::kCollege: return "college";
    case Label::kNonCollege: return "non-college";
    case Label::kUnlabeled: return "unlabeled";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view s) {
  if (s == "college") return Label::kCollege;
  if (s == "non-college") return Label::kNonCollege;
  if (s == "unlabeled") return Label::kUnlabeled;
  return std::nullopt;
}

RuleSet::RuleSet(std::vector<LabelRule> rules) {
  rules_.reserve(rules.size());
  for (auto& r : rules) add(std::move(r));
}

void RuleSet::add(LabelRule rule) {
  if (rule.label == Label::kUnlabeled) {
    throw ValidationError("rule '" + rule.description + "' must label college or non-college");
  }
  try {
    std::regex re(rule.pattern, std::regex::ECMAScript | std::regex::icase |
                                    std::regex::optimize);
    rules_.push_back({std::move(rule), std::move(re)});
  } catch (const std::regex_error& e) {
    throw ValidationError("rule pattern '" + rule.pattern + "' does not compile: " + e.what());
  }
}

RuleSet RuleSet::parse(std::istream& in) {
  RuleSet set;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      LabelRule r;
      r.pattern = j.at("pattern").get<std::string>();
      const std::string label = j.at("label").get<std::string>();
      const auto l = parse_label(label);
      if (!l) throw ValidationError("unknown label '" + label + "'");
      r.label = *l;
      r.description = j.value("description", r.pattern);
      set.add(std::move(r));
    } catch (const json::exception& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return set;
}

RuleSet RuleSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  try {
    return parse(in);
  } catch (const ValidationError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

const RuleSet& RuleSet::defaults() {
  static const RuleSet set = load(default_data_dir() / "rules.jsonl");
  return set;
}

bool RuleSet::matches(size_t i, std::string_view text) const {
  return std::regex_search(text.begin(), text.end(), rules_[i].regex);
}

WeakLabel label_student(const StudentRecord& record, const RuleSet& rules) {
  std::vector<std::string> college;
  std::vector<std::string> non_college;
  for (size_t i = 0; i < rules.size(); ++i) {
    bool hit = rules.matches(i, record.bio);
    for (size_t t = 0; !hit && t < record.tweets.size(); ++t) {
      hit = rules.matches(i, record.tweets[t].text);
    }
    if (!hit) continue;
    const LabelRule& r = rules.rule(i);
    (r.label == Label::kCollege ? college : non_college).push_back(r.description);
  }
  WeakLabel out;
  if (!college.empty() && !non_college.empty()) {
    out.conflicting_rules = std::move(college);
    out.conflicting_rules.insert(out.conflicting_rules.end(), non_college.begin(),
                                 non_college.end());
  } else if (!college.empty()) {
    out.value = Label::kCollege;
    out.matched_rules = std::move(college);
  } else if (!non_college.empty()) {
    out.value = Label::kNonCollege;
    out.matched_rules = std::move(non_college);
  }
  return out;
}

CorpusLabels label_corpus(const std::vector<StudentRecord>& records, const RuleSet& rules) {
  CorpusLabels out;
  out.labels.reserve(records.size());
  for (const auto& r : records) {
    WeakLabel l = label_student(r, rules);
    switch (l.value) {
      case Label::kCollege: out.partition.college.push_back(r.id); break;
      case Label::kNonCollege: out.partition.non_college.push_back(r.id); break;
      case Label::kUnlabeled: out.partition.unlabeled.push_back(r.id); break;
    }
    out.labels.push_back(std::move(l));
  }
  return out;
}

json to_json(const LabelRow& row) {
  json j;
  j["id"] = row.id;
  j["label"] = to_string(row.weak.value);
  j["matched_rules"] = row.weak.matched_rules;
  j["conflicting_rules"] = row.weak.conflicting_rules;
  j["override"] = row.override_label ? json(to_string(*row.override_label)) : json(nullptr);
  return j;
}

LabelRow label_row_from_json(const json& j) {
  LabelRow row;
  row.id = j.at("id").get<std::string>();
  const std::string label = j.at("label").get<std::string>();
  const auto l = parse_label(label);
  if (!l) throw ValidationError("unknown label '" + label + "'");
  row.weak.value = *l;
  if (auto it = j.find("matched_rules"); it != j.end() && it->is_array()) {
    row.weak.matched_rules = it->get<std::vector<std::string>>();
  }
  if (auto it = j.find("conflicting_rules"); it != j.end() && it->is_array()) {
    row.weak.conflicting_rules = it->get<std::vector<std::string>>();
  }
  if (auto it = j.find("override"); it != j.end() && !it->is_null()) {
    const std::string o = it->get<std::string>();
    row.override_label = parse_label(o);
    if (!row.override_label) throw ValidationError("unknown override label '" + o + "'");
  }
  return row;
}

std::vector<LabelRow> load_labels(const std::filesystem::path& path) {
  std::vector<LabelRow> rows;
  size_t n = 0;
  for (const auto& j : read_jsonl(path)) {
    ++n;
    try {
      rows.push_back(label_row_from_json(j));
    } catch (const std::exception& e) {
      throw DataError(path.string() + ": row " + std::to_string(n) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace stem_match
