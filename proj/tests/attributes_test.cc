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

#include "stem_match/attributes.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace stem_match {
namespace {

using S = PredictorSource;
using A = PredictedAttribute;

PredictorOutput out(S s, A a, std::optional<std::string> v, std::optional<double> acc) {
  return {s, a, std::move(v), acc};
}

TEST(ResolveGender, HighestAccuracyWins) {
  const std::vector<PredictorOutput> o{out(S::kNameGender, A::kGender, "male", 0.7),
                                       out(S::kFace, A::kGender, "female", 0.9),
                                       out(S::kFace, A::kRace, "Asian", 0.99)};
  const auto r = resolve_gender(o);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, "female");
  EXPECT_EQ(r->source, "face");
  EXPECT_DOUBLE_EQ(r->accuracy, 0.9);
}

TEST(ResolveGender, AllNullIsAbsent) {
  const std::vector<PredictorOutput> o{out(S::kNameGender, A::kGender, {}, {}),
                                       out(S::kFace, A::kGender, {}, {})};
  EXPECT_FALSE(resolve_gender(o));
  EXPECT_FALSE(resolve_gender({}));
}

TEST(ResolveRace, TiesUseSourcePriority) {
  const std::vector<PredictorOutput> o{out(S::kNameDemographics, A::kRace, "White", 0.8),
                                       out(S::kFace, A::kRace, "Asian", 0.8)};
  EXPECT_EQ(resolve_race(o)->value, "Asian");
}

TEST(ResolveRace, PermutationInvariantAndMaxAccuracy) {
  std::mt19937_64 rng(1);
  const std::vector<std::string> races{"White", "Black", "Asian", "Api", "Hispanic"};
  const std::vector<double> accs{0.5, 0.6, 0.6, 0.8, 0.8, 0.95};
  for (int round = 0; round < 200; ++round) {
    std::vector<PredictorOutput> o;
    std::optional<double> max_acc;
    const int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      if (rng() % 4 == 0) {
        o.push_back(out(S::kFace, A::kRace, {}, {}));
        continue;
      }
      const double a = accs[rng() % accs.size()];
      o.push_back(out(rng() % 2 ? S::kFace : S::kNameDemographics, A::kRace,
                      races[rng() % races.size()], a));
      max_acc = std::max(max_acc.value_or(0.0), a);
    }
    const auto base = resolve_race(o);
    EXPECT_EQ(base.has_value(), max_acc.has_value());
    if (base) EXPECT_EQ(base->accuracy, *max_acc);
    for (int p = 0; p < 5; ++p) {
      std::shuffle(o.begin(), o.end(), rng);
      EXPECT_EQ(resolve_race(o), base);
    }
  }
}

TEST(ResolveLocation, Normalizes) {
  EXPECT_EQ(resolve_location("  Round   Rock, TX "), "round rock, tx");
  EXPECT_EQ(resolve_location("mcallentx"), "mcallentx");
  EXPECT_FALSE(resolve_location("   "));
}

TEST(StudentInterests, DedupAndFold) {
  StudentRecord r;
  r.tweets = {{"love #Java and #java", false}, {"#hiking", false}};
  EXPECT_EQ(extract_student_interests(r), (std::set<std::string>{"java", "hiking"}));
  r.tweets = {{"#computersciencelife rules", false}};
  EXPECT_EQ(extract_student_interests(r), (std::set<std::string>{"computersciencelife"}));
  r.tweets = {{"no tags", false}};
  EXPECT_TRUE(extract_student_interests(r).empty());
}

TEST(CandidateInterests, MergeAndFold) {
  CandidateRecord c;
  c.interests_raw = {"Web Development"};
  c.skills_raw = {"web development"};
  EXPECT_EQ(extract_candidate_interests(c), (std::set<std::string>{"web development"}));
  c.interests_raw = {"AI"};
  c.skills_raw = {"Robotics"};
  EXPECT_EQ(extract_candidate_interests(c), (std::set<std::string>{"ai", "robotics"}));
  c.interests_raw.clear();
  c.skills_raw.clear();
  EXPECT_TRUE(extract_candidate_interests(c).empty());
}

TEST(CandidateInterests, IdempotentUnderReextraction) {
  CandidateRecord c;
  c.interests_raw = {" Machine  Learning ", "#AI", "Chess"};
  const auto once = extract_candidate_interests(c);
  CandidateRecord again;
  again.interests_raw.assign(once.begin(), once.end());
  EXPECT_EQ(extract_candidate_interests(again), once);
}

TEST(BuildProfile, FullPartialEmpty) {
  StudentRecord r;
  r.id = "s";
  r.location_raw = "Boston, MA";
  r.tweets = {{"#AI", false}};
  r.predictor_outputs = {out(S::kNameGender, A::kGender, "female", 0.9),
                         out(S::kFace, A::kRace, "Black", 0.7)};
  AttributeProfile p = build_profile(r);
  EXPECT_EQ(p.gender, Gender::kFemale);
  EXPECT_EQ(p.race, Race::kBlack);
  EXPECT_EQ(p.location, "boston, ma");
  EXPECT_EQ(p.interests, std::set<std::string>{"ai"});
  EXPECT_EQ(p.gender_provenance, (Provenance{"name-gender", 0.9}));

  r.predictor_outputs.pop_back();
  p = build_profile(r);
  EXPECT_TRUE(p.gender);
  EXPECT_FALSE(p.race);

  StudentRecord empty;
  empty.id = "e";
  empty.bio = "x";
  p = build_profile(empty);
  EXPECT_FALSE(p.gender || p.race || p.location);
  EXPECT_TRUE(p.interests.empty());
}

TEST(NameTable, PredictsFromGivenAndSurname) {
  NameTable t;
  t.add_given("maria", {"female", 0.97, {}, {}});
  t.add_surname("nguyen", {{}, {}, "Asian", 0.9});
  const auto p = t.predict("Maria Nguyen");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], out(S::kNameGender, A::kGender, "female", 0.97));
  EXPECT_EQ(p[1], out(S::kNameDemographics, A::kRace, "Asian", 0.9));
  const auto unknown = t.predict("Zed");
  ASSERT_EQ(unknown.size(), 2u);
  EXPECT_FALSE(unknown[0].value);
  EXPECT_FALSE(unknown[1].value);
}

TEST(NameTable, AugmentKeepsExistingSources) {
  NameTable t;
  t.add_given("maria", {"female", 0.97, {}, {}});
  const std::vector<PredictorOutput> existing{out(S::kNameGender, A::kGender, {}, {})};
  const auto merged = augment_predictions(existing, "Maria", t);
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_FALSE(merged[0].value);
  EXPECT_EQ(merged[1].source, S::kNameDemographics);
  const auto filled = augment_predictions({}, "Maria", t);
  ASSERT_EQ(filled.size(), 2u);
  EXPECT_EQ(filled[0].value, "female");
}

TEST(NameTable, BundledDefaults) {
  const auto& t = NameTable::defaults();
  EXPECT_GT(t.given_count(), 20u);
  EXPECT_GT(t.surname_count(), 20u);
}

}  // namespace
}  // namespace stem_match
