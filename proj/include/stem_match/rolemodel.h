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

#ifndef STEM_MATCH_ROLEMODEL_H_
#define STEM_MATCH_ROLEMODEL_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stem_match/profiles.h"

namespace stem_match {

enum class IndustryGroup { kStem, kStemRelated, kNonStem };

std::string_view to_string(IndustryGroup g);
std::optional<IndustryGroup> parse_industry_group(std::string_view s);

// Industry name -> group. Lookups are case-insensitive and ignore extra
// whitespace.
class IndustryTaxonomy {
 public:
  struct Entry {
    std::string name;
    IndustryGroup group;
  };

  IndustryTaxonomy() = default;

  // `taxonomy.jsonl`: {"industry": "...", "group": "STEM"|"STEM-related"|"non-STEM"}
  static IndustryTaxonomy parse(std::istream& in);
  static IndustryTaxonomy load(const std::filesystem::path& path);
  // The bundled 147-industry table.
  static const IndustryTaxonomy& defaults();

  // Throws ValidationError if the industry is already present.
  void add(std::string name, IndustryGroup group);
  // Replaces the group of an existing industry; throws if absent.
  void reassign(std::string_view name, IndustryGroup group);

  std::optional<IndustryGroup> group_of(std::string_view industry) const;
  bool contains(std::string_view industry) const {
    return group_of(industry).has_value();
  }
  size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

// Canonical STEM majors plus aliases. Matching is case-insensitive exact.
class StemMajorList {
 public:
  StemMajorList() = default;

  // `majors.jsonl`: {"major": "...", "aliases": ["...", ...]}
  static StemMajorList parse(std::istream& in);
  static StemMajorList load(const std::filesystem::path& path);
  // The bundled 38-major list.
  static const StemMajorList& defaults();

  // Throws ValidationError on a repeated canonical name or an alias that
  // already resolves to a different major.
  void add(std::string canonical, const std::vector<std::string>& aliases = {});

  // Canonical major for a free-text degree subject, if any.
  std::optional<std::string_view> resolve(std::string_view subject) const;
  size_t size() const { return canonical_.size(); }
  const std::vector<std::string>& canonical_names() const { return canonical_; }

 private:
  std::vector<std::string> canonical_;
  std::unordered_map<std::string, size_t> lookup_;
};

enum class RoleModelReason {
  kStemIndustry,
  kStemRelatedWithDegree,
  kStemRelatedWithoutDegree,
  kNonStemIndustry,
  kUnknownIndustry,
};

std::string_view to_string(RoleModelReason r);

struct RoleModelDecision {
  bool is_role_model = false;
  RoleModelReason reason = RoleModelReason::kNonStemIndustry;
  // The major that satisfied the STEM-related branch.
  std::optional<std::string> matched_major;
};

// A candidate is a role model when their industry is STEM, or STEM-related
// and at least one degree subject is a STEM major. Reads only `industry` and
// `education_majors`.
RoleModelDecision is_role_model(const CandidateRecord& candidate,
                                const IndustryTaxonomy& taxonomy,
                                const StemMajorList& majors);

struct RoleModelSummary {
  size_t total = 0;
  size_t stem = 0;
  size_t stem_related_with_degree = 0;
  size_t stem_related_without_degree = 0;
  size_t non_stem = 0;
  size_t unknown_industry = 0;
};

struct RoleModelSelection {
  std::vector<CandidateRecord> role_models;  // input order preserved
  std::vector<RoleModelDecision> decisions;  // parallel to role_models
  RoleModelSummary summary;
};

RoleModelSelection filter_role_models(const std::vector<CandidateRecord>& candidates,
                                      const IndustryTaxonomy& taxonomy,
                                      const StemMajorList& majors);

}  // namespace stem_match

#endif  // STEM_MATCH_ROLEMODEL_H_
