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

#ifndef STEM_MATCH_SYNTH_H_
#define STEM_MATCH_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "stem_match/matcher.h"
#include "stem_match/profiles.h"

namespace stem_match {

struct SynthCity {
  std::string city;
  std::string state;       // postal abbreviation, used in annotations
  std::string state_name;  // spelled out, used in some free-text locations
  double weight = 1.0;
};

struct Missingness {
  double gender = 0.0;
  double race = 0.0;
  double location = 0.0;
  double interests = 0.0;
};

// Parameters of a synthetic population. Marginals are normalized on use.
struct SynthConfig {
  uint64_t seed = 42;
  size_t students = 100;
  size_t candidates = 500;
  std::vector<SynthCity> cities;
  std::map<std::string, double> gender_marginals;
  std::map<std::string, double> race_marginals;
  std::vector<std::string> interests;
  double planted_fraction = 1.0;
  // Share of students written as college students; the rest are split
  // between non-college profiles.
  double college_fraction = 0.8;
  Missingness missingness;
  int tweets_per_student = 20;
};

// A population over the top-10 role-model cities and ten others, even
// gender split and a STEM-leaning interest vocabulary.
SynthConfig default_synth_config();

// Throws ValidationError on out-of-range probabilities, empty vocabularies
// or more planted students than candidates.
void validate(const SynthConfig& config);

SynthConfig synth_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SynthConfig& config);

struct SynthData {
  std::vector<StudentRecord> students;
  std::vector<CandidateRecord> candidates;
  std::vector<GroundTruthAnnotation> annotations;  // students, then candidates
};

// Seeded and deterministic. Each planted student gets one candidate with the
// same gender, race and city whose interests are the student's hashtags
// written as phrases.
SynthData generate_synthetic(const SynthConfig& config);

// students.jsonl, candidates.jsonl and gt.jsonl under `dir`.
void write_synthetic(const SynthData& data, const std::filesystem::path& dir);

}  // namespace stem_match

#endif  // STEM_MATCH_SYNTH_H_
