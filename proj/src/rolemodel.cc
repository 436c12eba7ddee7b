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

#include "stem_match/rolemodel.h"

#include <algorithm>
#include <fstream>

#include "stem_match/text.h"

namespace stem_match {

using nlohmann::json;

namespace {

std::string key_of(std::string_view s) {
  return text::fold_case(text::collapse_whitespace(s));
}

template <typename Fn>
void for_each_jsonl_row(std::istream& in, Fn&& fn) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(json::parse(line));
    } catch (const json::exception& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace

std::string_view to_string(IndustryGroup g) {
  switch (g) {
    case IndustryGroup::kStem: return "STEM";
    case IndustryGroup::kStemRelated: return "STEM-related";
    case IndustryGroup::kNonStem: return "non-STEM";
  }
  return "?";
}

std::optional<IndustryGroup> parse_industry_group(std::string_view s) {
  const std::string k = key_of(s);
  if (k == "stem") return IndustryGroup::kStem;
  if (k == "stem-related") return IndustryGroup::kStemRelated;
  if (k == "non-stem") return IndustryGroup::kNonStem;
  return std::nullopt;
}

std::string_view to_string(RoleModelReason r) {
  switch (r) {
    case RoleModelReason::kStemIndustry: return "stem-industry";
    case RoleModelReason::kStemRelatedWithDegree: return "stem-related-with-degree";
    case RoleModelReason::kStemRelatedWithoutDegree: return "stem-related-without-degree";
    case RoleModelReason::kNonStemIndustry: return "non-stem-industry";
    case RoleModelReason::kUnknownIndustry: return "unknown-industry";
  }
  return "?";
}

IndustryTaxonomy IndustryTaxonomy::parse(std::istream& in) {
  IndustryTaxonomy t;
  for_each_jsonl_row(in, [&](const json& j) {
    const std::string name = j.at("industry").get<std::string>();
    const std::string group = j.at("group").get<std::string>();
    const auto g = parse_industry_group(group);
    if (!g) throw ValidationError("unknown industry group '" + group + "'");
    t.add(name, *g);
  });
  return t;
}

IndustryTaxonomy IndustryTaxonomy::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  try {
    return parse(in);
  } catch (const ValidationError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

const IndustryTaxonomy& IndustryTaxonomy::defaults() {
  static const IndustryTaxonomy t = load(default_data_dir() / "taxonomy.jsonl");
  return t;
}

void IndustryTaxonomy::add(std::string name, IndustryGroup group) {
  std::string key = key_of(name);
  if (key.empty()) throw ValidationError("empty industry name");
  if (index_.contains(key)) throw ValidationError("duplicate industry '" + name + "'");
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back({std::move(name), group});
}

void IndustryTaxonomy::reassign(std::string_view name, IndustryGroup group) {
  auto it = index_.find(key_of(name));
  if (it == index_.end()) throw ValidationError("unknown industry '" + std::string(name) + "'");
  entries_[it->second].group = group;
}

std::optional<IndustryGroup> IndustryTaxonomy::group_of(std::string_view industry) const {
  auto it = index_.find(key_of(industry));
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].group;
}

StemMajorList StemMajorList::parse(std::istream& in) {
  StemMajorList m;
  for_each_jsonl_row(in, [&](const json& j) {
    std::vector<std::string> aliases;
    if (auto it = j.find("aliases"); it != j.end() && !it->is_null()) {
      aliases = it->get<std::vector<std::string>>();
    }
    m.add(j.at("major").get<std::string>(), aliases);
  });
  return m;
}

StemMajorList StemMajorList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  try {
    return parse(in);
  } catch (const ValidationError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

const StemMajorList& StemMajorList::defaults() {
  static const StemMajorList m = load(default_data_dir() / "majors.jsonl");
  return m;
}

void StemMajorList::add(std::string canonical, const std::vector<std::string>& aliases) {
  const std::string key = key_of(canonical);
  if (key.empty()) throw ValidationError("empty major name");
  if (lookup_.contains(key)) {
    throw ValidationError("major '" + canonical + "' is already listed");
  }
  std::vector<std::string> keys;
  for (const auto& a : aliases) {
    std::string k = key_of(a);
    if (k.empty() || k == key || std::find(keys.begin(), keys.end(), k) != keys.end()) {
      continue;
    }
    if (lookup_.contains(k)) {
      throw ValidationError("alias '" + a + "' already maps to another major");
    }
    keys.push_back(std::move(k));
  }
  const size_t idx = canonical_.size();
  canonical_.push_back(std::move(canonical));
  lookup_.emplace(key, idx);
  for (auto& k : keys) lookup_.emplace(std::move(k), idx);
}

std::optional<std::string_view> StemMajorList::resolve(std::string_view subject) const {
  auto it = lookup_.find(key_of(subject));
  if (it == lookup_.end()) return std::nullopt;
  return canonical_[it->second];
}

RoleModelDecision is_role_model(const CandidateRecord& candidate,
                                const IndustryTaxonomy& taxonomy,
                                const StemMajorList& majors) {
  RoleModelDecision d;
  const auto group = taxonomy.group_of(candidate.industry);
  if (!group) {
    d.reason = RoleModelReason::kUnknownIndustry;
    return d;
  }
  switch (*group) {
    case IndustryGroup::kStem:
      d.is_role_model = true;
      d.reason = RoleModelReason::kStemIndustry;
      return d;
    case IndustryGroup::kNonStem:
      d.reason = RoleModelReason::kNonStemIndustry;
      return d;
    case IndustryGroup::kStemRelated:
      break;
  }
  for (const auto& subject : candidate.education_majors) {
    if (auto m = majors.resolve(subject)) {
      d.is_role_model = true;
      d.reason = RoleModelReason::kStemRelatedWithDegree;
      d.matched_major = std::string(*m);
      return d;
    }
  }
  d.reason = RoleModelReason::kStemRelatedWithoutDegree;
  return d;
}

RoleModelSelection filter_role_models(const std::vector<CandidateRecord>& candidates,
                                      const IndustryTaxonomy& taxonomy,
                                      const StemMajorList& majors) {
  RoleModelSelection sel;
  sel.summary.total = candidates.size();
  for (const auto& c : candidates) {
    RoleModelDecision d = is_role_model(c, taxonomy, majors);
    switch (d.reason) {
      case RoleModelReason::kStemIndustry: ++sel.summary.stem; break;
      case RoleModelReason::kStemRelatedWithDegree: ++sel.summary.stem_related_with_degree; break;
      case RoleModelReason::kStemRelatedWithoutDegree: ++sel.summary.stem_related_without_degree; break;
      case RoleModelReason::kNonStemIndustry: ++sel.summary.non_stem; break;
      case RoleModelReason::kUnknownIndustry: ++sel.summary.unknown_industry; break;
    }
    if (d.is_role_model) {
      sel.role_models.push_back(c);
      sel.decisions.push_back(std::move(d));
    }
  }
  return sel;
}

}  // namespace stem_match
