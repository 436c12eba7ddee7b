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

#ifndef STEM_MATCH_PROFILES_H_
#define STEM_MATCH_PROFILES_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace stem_match {

class IndustryTaxonomy;

// Thrown for unreadable inputs and other failures that stop a whole run.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a single record violates its type invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr size_t kMaxTweetsPerStudent = 200;

enum class PredictorSource { kNameGender, kNameDemographics, kFace };
enum class PredictedAttribute { kGender, kRace };
enum class Gender { kFemale, kMale };
enum class Race { kWhite, kBlack, kAsian, kApi, kHispanic };

std::string_view to_string(PredictorSource s);
std::string_view to_string(PredictedAttribute a);
std::string_view to_string(Gender g);
std::string_view to_string(Race r);
std::optional<PredictorSource> parse_predictor_source(std::string_view s);
std::optional<PredictedAttribute> parse_predicted_attribute(std::string_view s);
// Case-insensitive; returns the canonical spelling.
std::optional<Gender> parse_gender(std::string_view s);
std::optional<Race> parse_race(std::string_view s);

struct PredictorOutput {
  PredictorSource source = PredictorSource::kNameGender;
  PredictedAttribute attribute = PredictedAttribute::kGender;
  std::optional<std::string> value;  // canonical vocabulary spelling
  std::optional<double> accuracy;

  bool operator==(const PredictorOutput&) const = default;
};

struct Tweet {
  std::string text;
  bool is_retweet = false;

  bool operator==(const Tweet&) const = default;
};

// A social profile of a (possible) student. Tweets are most recent first.
struct StudentRecord {
  std::string id;
  std::vector<Tweet> tweets;
  std::string bio;
  std::string display_name;
  std::string location_raw;
  std::vector<PredictorOutput> predictor_outputs;

  bool operator==(const StudentRecord&) const = default;
};

// A professional profile of a possible role model.
struct CandidateRecord {
  std::string id;
  std::string full_name;
  std::string industry;
  std::vector<std::string> education_majors;
  std::vector<std::string> interests_raw;
  std::vector<std::string> skills_raw;
  std::string location_raw;
  std::optional<std::string> profile_url;
  std::vector<PredictorOutput> predictor_outputs;
  // Set at load time when `industry` is not in the taxonomy.
  bool unknown_industry = false;

  bool operator==(const CandidateRecord&) const = default;
};

// Where a resolved gender/race came from.
struct Provenance {
  std::string source;
  double accuracy = 1.0;

  bool operator==(const Provenance&) const = default;
};

// The four matching attributes of one person. Interests are normalized:
// case-folded, no '#', no empties.
struct AttributeProfile {
  std::string id;
  std::optional<Gender> gender;
  std::optional<Race> race;
  std::optional<std::string> location;
  std::set<std::string> interests;
  std::optional<Provenance> gender_provenance;
  std::optional<Provenance> race_provenance;

  bool operator==(const AttributeProfile&) const = default;
};

struct RecordError {
  size_t line = 0;  // 1-based
  std::string id;   // empty when the id could not be read
  std::string message;
};

template <typename Record>
struct LoadResult {
  std::vector<Record> records;
  std::vector<RecordError> errors;
};

// Checks PredictorOutput invariants; throws ValidationError.
void validate(const PredictorOutput& p);
void validate(const StudentRecord& r);
void validate(const CandidateRecord& r);

// JSON conversion. from_json functions validate and throw ValidationError.
nlohmann::json to_json(const PredictorOutput& p);
nlohmann::json to_json(const StudentRecord& r);
nlohmann::json to_json(const CandidateRecord& r);
nlohmann::json to_json(const AttributeProfile& p);
PredictorOutput predictor_output_from_json(const nlohmann::json& j);
StudentRecord student_from_json(const nlohmann::json& j);
CandidateRecord candidate_from_json(const nlohmann::json& j);
AttributeProfile profile_from_json(const nlohmann::json& j);

// JSON Lines loaders. Blank lines are skipped. Invalid lines and repeated
// ids are reported in `errors` and loading continues; an unreadable file
// throws DataError.
LoadResult<StudentRecord> parse_students(std::istream& in);
LoadResult<StudentRecord> load_students(const std::filesystem::path& path);
LoadResult<CandidateRecord> parse_candidates(std::istream& in,
                                             const IndustryTaxonomy& taxonomy);
LoadResult<CandidateRecord> load_candidates(const std::filesystem::path& path,
                                            const IndustryTaxonomy& taxonomy);
LoadResult<AttributeProfile> load_profiles(const std::filesystem::path& path);

// Writes one compact JSON document per line.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::json>& rows);
// Reads every non-blank line as JSON; throws DataError on bad JSON.
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

// Directory holding the bundled data files. STEM_MATCH_DATA overrides the
// compiled-in location.
std::filesystem::path default_data_dir();

// Whole-file helpers shared by the CLI and pipeline.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace stem_match

#endif  // STEM_MATCH_PROFILES_H_
