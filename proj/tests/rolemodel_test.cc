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

#include <gtest/gtest.h>

#include <random>

namespace stem_match {
namespace {

CandidateRecord candidate(std::string id, std::string industry, std::vector<std::string> majors = {}) {
  CandidateRecord c;
  c.id = std::move(id);
  c.full_name = "Pat Doe";
  c.industry = std::move(industry);
  c.education_majors = std::move(majors);
  c.location_raw = "Boston, MA";
  return c;
}

const IndustryTaxonomy& tax() { return IndustryTaxonomy::defaults(); }
const StemMajorList& majors() { return StemMajorList::defaults(); }

TEST(Taxonomy, DefaultTable) {
  EXPECT_EQ(tax().size(), 147u);
  EXPECT_EQ(tax().group_of("Computer Software"), IndustryGroup::kStem);
  EXPECT_EQ(tax().group_of("financial  services"), IndustryGroup::kStemRelated);
  EXPECT_EQ(tax().group_of("Management Consulting"), IndustryGroup::kStemRelated);
  EXPECT_EQ(tax().group_of("Music"), IndustryGroup::kNonStem);
  EXPECT_EQ(tax().group_of("Restaurants"), IndustryGroup::kNonStem);
  EXPECT_FALSE(tax().group_of("Basket Weaving").has_value());
}

TEST(Majors, DefaultListAndAliases) {
  EXPECT_EQ(majors().size(), 38u);
  EXPECT_EQ(majors().resolve("computer science"), "Computer Science");
  EXPECT_EQ(majors().resolve("CS"), "Computer Science");
  EXPECT_FALSE(majors().resolve("Computer Scienc").has_value());
  EXPECT_FALSE(majors().resolve("English").has_value());
}

TEST(Majors, RejectsConflictingAdds) {
  StemMajorList m;
  m.add("Physics", {"phys"});
  EXPECT_THROW(m.add("Physics"), ValidationError);
  EXPECT_THROW(m.add("Physical Science", {"phys"}), ValidationError);
}

TEST(IsRoleModel, Branches) {
  auto d = is_role_model(candidate("a", "Computer Software"), tax(), majors());
  EXPECT_TRUE(d.is_role_model);
  EXPECT_EQ(d.reason, RoleModelReason::kStemIndustry);

  d = is_role_model(candidate("b", "Financial Services", {"Computer Science"}), tax(), majors());
  EXPECT_TRUE(d.is_role_model);
  EXPECT_EQ(d.reason, RoleModelReason::kStemRelatedWithDegree);
  EXPECT_EQ(d.matched_major, "Computer Science");

  d = is_role_model(candidate("c", "Financial Services", {"History"}), tax(), majors());
  EXPECT_FALSE(d.is_role_model);
  EXPECT_EQ(d.reason, RoleModelReason::kStemRelatedWithoutDegree);

  d = is_role_model(candidate("d", "Music", {"Computer Science"}), tax(), majors());
  EXPECT_FALSE(d.is_role_model);
  EXPECT_EQ(d.reason, RoleModelReason::kNonStemIndustry);

  d = is_role_model(candidate("e", "Basket Weaving", {"Physics"}), tax(), majors());
  EXPECT_FALSE(d.is_role_model);
  EXPECT_EQ(d.reason, RoleModelReason::kUnknownIndustry);
}

TEST(Filter, EmptyInput) {
  const auto s = filter_role_models({}, tax(), majors());
  EXPECT_TRUE(s.role_models.empty());
  EXPECT_EQ(s.summary.total, 0u);
}

TEST(Filter, OrderPreservingSubsetWithCounts) {
  const auto s = filter_role_models({candidate("1", "Biotechnology"), candidate("2", "Music"),
                                     candidate("3", "Banking", {"math"})},
                                    tax(), majors());
  ASSERT_EQ(s.role_models.size(), 2u);
  EXPECT_EQ(s.role_models[0].id, "1");
  EXPECT_EQ(s.role_models[1].id, "3");
  EXPECT_EQ(s.summary.stem, 1u);
  EXPECT_EQ(s.summary.stem_related_with_degree, 1u);
  EXPECT_EQ(s.summary.non_stem, 1u);
}

TEST(Filter, AllNonStem) {
  const auto s = filter_role_models({candidate("1", "Music"), candidate("2", "Restaurants")}, tax(),
                                    majors());
  EXPECT_TRUE(s.role_models.empty());
  EXPECT_EQ(s.summary.stem, 0u);
  EXPECT_EQ(s.summary.stem_related_with_degree, 0u);
  EXPECT_EQ(s.summary.non_stem, 2u);
}

TEST(Properties, ReclassifyingToStemNeverShrinks) {
  std::mt19937_64 rng(8);
  const auto& entries = tax().entries();
  std::vector<CandidateRecord> pool;
  for (int i = 0; i < 300; ++i) {
    const auto& e = entries[rng() % entries.size()];
    std::vector<std::string> m;
    if (rng() % 2) m.push_back(rng() % 2 ? "Physics" : "English");
    pool.push_back(candidate(std::to_string(i), e.name, m));
  }
  const auto before = filter_role_models(pool, tax(), majors());
  std::set<std::string> accepted;
  for (const auto& c : before.role_models) accepted.insert(c.id);
  for (int round = 0; round < 20; ++round) {
    IndustryTaxonomy t = tax();
    const auto& e = entries[rng() % entries.size()];
    t.reassign(e.name, IndustryGroup::kStem);
    std::set<std::string> now;
    for (const auto& c : filter_role_models(pool, t, majors()).role_models) now.insert(c.id);
    EXPECT_TRUE(std::includes(now.begin(), now.end(), accepted.begin(), accepted.end()));
  }
}

TEST(Properties, DecisionReadsOnlyIndustryAndMajors) {
  std::mt19937_64 rng(9);
  const auto& entries = tax().entries();
  for (int i = 0; i < 200; ++i) {
    CandidateRecord c = candidate("x", entries[rng() % entries.size()].name,
                                  {rng() % 2 ? "ee" : "Art"});
    const bool base = is_role_model(c, tax(), majors()).is_role_model;
    c.id = "other";
    c.full_name = "Someone Else";
    c.location_raw = "Nowhere";
    c.interests_raw = {"robotics"};
    c.skills_raw = {"c++"};
    c.profile_url = "https://example.com/p";
    c.predictor_outputs = {{PredictorSource::kFace, PredictedAttribute::kGender, "male", 0.9}};
    EXPECT_EQ(is_role_model(c, tax(), majors()).is_role_model, base);
  }
}

}  // namespace
}  // namespace stem_match
