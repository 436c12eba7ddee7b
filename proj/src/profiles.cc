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

#include "stem_match/profiles.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "stem_match/rolemodel.h"
#include "stem_match/text.h"

namespace stem_match {

using nlohmann::json;

namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::string get_string(const json& j, const char* key, bool required = false) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    if (required) throw ValidationError(std::string("missing field '") + key + "'");
    return {};
  }
  if (!it->is_string()) {
    throw ValidationError(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> get_strings(const json& j, const char* key) {
  std::vector<std::string> out;
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw ValidationError(std::string("field '") + key + "' must be an array");
  }
  for (const auto& e : *it) {
    if (!e.is_string()) {
      throw ValidationError(std::string("field '") + key + "' must hold strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<PredictorOutput> get_predictions(const json& j) {
  std::vector<PredictorOutput> out;
  auto it = j.find("predictor_outputs");
  if (it == j.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw ValidationError("field 'predictor_outputs' must be an array");
  }
  for (const auto& e : *it) out.push_back(predictor_output_from_json(e));
  return out;
}

json predictions_json(const std::vector<PredictorOutput>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  return arr;
}

template <typename Record, typename FromJson>
LoadResult<Record> parse_lines(std::istream& in, FromJson&& from_json) {
  LoadResult<Record> result;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    std::string id;
    try {
      json j = json::parse(line);
      if (j.is_object()) {
        auto it = j.find("id");
        if (it != j.end() && it->is_string()) id = it->get<std::string>();
      }
      Record r = from_json(j);
      if (!seen.insert(r.id).second) {
        result.errors.push_back({line_no, r.id, "duplicate id"});
        continue;
      }
      result.records.push_back(std::move(r));
    } catch (const json::exception& e) {
      result.errors.push_back({line_no, id, std::string("malformed JSON: ") + e.what()});
    } catch (const ValidationError& e) {
      result.errors.push_back({line_no, id, e.what()});
    }
  }
  return result;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  return in;
}

}  // namespace

std::string_view to_string(PredictorSource s) {
  switch (s) {
    case PredictorSource::kNameGender: return "name-gender";
    case PredictorSource::kNameDemographics: return "name-demographics";
    case PredictorSource::kFace: return "face";
  }
  return "?";
}

std::string_view to_string(PredictedAttribute a) {
  return a == PredictedAttribute::kGender ? "gender" : "race";
}

std::string_view to_string(Gender g) { return g == Gender::kFemale ? "female" : "male"; }

std::string_view to_string(Race r) {
  switch (r) {
    case Race::kWhite: return "White";
    case Race::kBlack: return "Black";
    case Race::kAsian: return "Asian";
    case Race::kApi: return "Api";
    case Race::kHispanic: return "Hispanic";
  }
  return "?";
}

std::optional<PredictorSource> parse_predictor_source(std::string_view s) {
  for (auto v : {PredictorSource::kNameGender, PredictorSource::kNameDemographics,
                 PredictorSource::kFace}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

std::optional<PredictedAttribute> parse_predicted_attribute(std::string_view s) {
  if (s == "gender") return PredictedAttribute::kGender;
  if (s == "race") return PredictedAttribute::kRace;
  return std::nullopt;
}

std::optional<Gender> parse_gender(std::string_view s) {
  const std::string l = lower_ascii(s);
  if (l == "female") return Gender::kFemale;
  if (l == "male") return Gender::kMale;
  return std::nullopt;
}

std::optional<Race> parse_race(std::string_view s) {
  const std::string l = lower_ascii(s);
  for (auto v : {Race::kWhite, Race::kBlack, Race::kAsian, Race::kApi, Race::kHispanic}) {
    if (l == lower_ascii(to_string(v))) return v;
  }
  return std::nullopt;
}

void validate(const PredictorOutput& p) {
  if (p.value.has_value() != p.accuracy.has_value()) {
    throw ValidationError("predictor value and accuracy must be both null or both set");
  }
  if (p.accuracy && !(*p.accuracy >= 0.0 && *p.accuracy <= 1.0)) {
    throw ValidationError("predictor accuracy outside [0,1]");
  }
  if (p.value) {
    const bool known = p.attribute == PredictedAttribute::kGender
                           ? parse_gender(*p.value).has_value()
                           : parse_race(*p.value).has_value();
    if (!known) {
      throw ValidationError("unknown " + std::string(to_string(p.attribute)) +
                            " value '" + *p.value + "'");
    }
  }
}

void validate(const StudentRecord& r) {
  if (r.id.empty()) throw ValidationError("empty id");
  if (r.tweets.empty() && is_blank(r.bio)) {
    throw ValidationError("record has no tweets and an empty bio");
  }
  if (r.tweets.size() > kMaxTweetsPerStudent) {
    throw ValidationError("more than 200 tweets");
  }
  for (const auto& p : r.predictor_outputs) validate(p);
}

void validate(const CandidateRecord& r) {
  if (r.id.empty()) throw ValidationError("empty id");
  if (is_blank(r.location_raw)) throw ValidationError("empty location_raw");
  for (const auto& p : r.predictor_outputs) validate(p);
}

json to_json(const PredictorOutput& p) {
  json j;
  j["source"] = to_string(p.source);
  j["attribute"] = to_string(p.attribute);
  j["value"] = p.value ? json(*p.value) : json(nullptr);
  j["accuracy"] = p.accuracy ? json(*p.accuracy) : json(nullptr);
  return j;
}

PredictorOutput predictor_output_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("predictor output must be an object");
  PredictorOutput p;
  const std::string source = get_string(j, "source", true);
  const auto s = parse_predictor_source(source);
  if (!s) throw ValidationError("unknown predictor source '" + source + "'");
  p.source = *s;
  const std::string attribute = get_string(j, "attribute", true);
  const auto a = parse_predicted_attribute(attribute);
  if (!a) throw ValidationError("unknown predicted attribute '" + attribute + "'");
  p.attribute = *a;
  if (auto it = j.find("value"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw ValidationError("predictor value must be a string");
    const std::string v = it->get<std::string>();
    if (p.attribute == PredictedAttribute::kGender) {
      const auto g = parse_gender(v);
      p.value = g ? std::string(to_string(*g)) : v;
    } else {
      const auto r = parse_race(v);
      p.value = r ? std::string(to_string(*r)) : v;
    }
  }
  if (auto it = j.find("accuracy"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) throw ValidationError("predictor accuracy must be a number");
    p.accuracy = it->get<double>();
  }
  validate(p);
  return p;
}

json to_json(const StudentRecord& r) {
  json tweets = json::array();
  for (const auto& t : r.tweets) {
    if (t.is_retweet) {
      tweets.push_back({{"text", t.text}, {"retweet", true}});
    } else {
      tweets.push_back(t.text);
    }
  }
  json j;
  j["id"] = r.id;
  j["tweets"] = std::move(tweets);
  j["bio"] = r.bio;
  j["display_name"] = r.display_name;
  j["location_raw"] = r.location_raw;
  j["predictor_outputs"] = predictions_json(r.predictor_outputs);
  return j;
}

StudentRecord student_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("record must be a JSON object");
  StudentRecord r;
  r.id = get_string(j, "id", true);
  if (auto it = j.find("tweets"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw ValidationError("field 'tweets' must be an array");
    for (const auto& t : *it) {
      if (r.tweets.size() == kMaxTweetsPerStudent) break;
      if (t.is_string()) {
        r.tweets.push_back({t.get<std::string>(), false});
      } else if (t.is_object()) {
        Tweet tw;
        tw.text = get_string(t, "text", true);
        if (auto rt = t.find("retweet"); rt != t.end() && !rt->is_null()) {
          if (!rt->is_boolean()) throw ValidationError("tweet 'retweet' must be a boolean");
          tw.is_retweet = rt->get<bool>();
        }
        r.tweets.push_back(std::move(tw));
      } else {
        throw ValidationError("tweets must be strings or {text, retweet} objects");
      }
    }
  }
  r.bio = get_string(j, "bio");
  r.display_name = get_string(j, "display_name");
  r.location_raw = get_string(j, "location_raw");
  r.predictor_outputs = get_predictions(j);
  validate(r);
  return r;
}

json to_json(const CandidateRecord& r) {
  json j;
  j["id"] = r.id;
  j["full_name"] = r.full_name;
  j["industry"] = r.industry;
  j["education_majors"] = r.education_majors;
  j["interests_raw"] = r.interests_raw;
  j["skills_raw"] = r.skills_raw;
  j["location_raw"] = r.location_raw;
  if (r.profile_url) j["profile_url"] = *r.profile_url;
  j["predictor_outputs"] = predictions_json(r.predictor_outputs);
  if (r.unknown_industry) j["unknown_industry"] = true;
  return j;
}

CandidateRecord candidate_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("record must be a JSON object");
  CandidateRecord r;
  r.id = get_string(j, "id", true);
  r.full_name = get_string(j, "full_name");
  r.industry = get_string(j, "industry");
  r.education_majors = get_strings(j, "education_majors");
  r.interests_raw = get_strings(j, "interests_raw");
  r.skills_raw = get_strings(j, "skills_raw");
  r.location_raw = get_string(j, "location_raw");
  if (auto it = j.find("profile_url"); it != j.end() && !it->is_null()) {
    r.profile_url = get_string(j, "profile_url");
  }
  r.predictor_outputs = get_predictions(j);
  validate(r);
  return r;
}

json to_json(const AttributeProfile& p) {
  json j;
  j["id"] = p.id;
  j["gender"] = p.gender ? json(to_string(*p.gender)) : json(nullptr);
  j["race"] = p.race ? json(to_string(*p.race)) : json(nullptr);
  j["location"] = p.location ? json(*p.location) : json(nullptr);
  j["interests"] = p.interests;  // std::set keeps this sorted
  if (p.gender_provenance) {
    j["gender_source"] = p.gender_provenance->source;
    j["gender_accuracy"] = p.gender_provenance->accuracy;
  }
  if (p.race_provenance) {
    j["race_source"] = p.race_provenance->source;
    j["race_accuracy"] = p.race_provenance->accuracy;
  }
  return j;
}

AttributeProfile profile_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("profile must be a JSON object");
  AttributeProfile p;
  p.id = get_string(j, "id", true);
  if (p.id.empty()) throw ValidationError("empty id");
  if (const std::string g = get_string(j, "gender"); !g.empty()) {
    p.gender = parse_gender(g);
    if (!p.gender) throw ValidationError("unknown gender '" + g + "'");
  }
  if (const std::string r = get_string(j, "race"); !r.empty()) {
    p.race = parse_race(r);
    if (!p.race) throw ValidationError("unknown race '" + r + "'");
  }
  if (const std::string l = get_string(j, "location"); !l.empty()) p.location = l;
  for (const auto& i : get_strings(j, "interests")) {
    if (i.empty() || i.front() == '#') {
      throw ValidationError("interest entries must be nonempty and lack '#'");
    }
    p.interests.insert(i);
  }
  auto provenance = [&](const char* src, const char* acc) -> std::optional<Provenance> {
    auto s = j.find(src);
    if (s == j.end() || s->is_null()) return std::nullopt;
    Provenance out{get_string(j, src), 1.0};
    if (auto a = j.find(acc); a != j.end() && a->is_number()) out.accuracy = a->get<double>();
    return out;
  };
  if (p.gender) p.gender_provenance = provenance("gender_source", "gender_accuracy");
  if (p.race) p.race_provenance = provenance("race_source", "race_accuracy");
  return p;
}

LoadResult<StudentRecord> parse_students(std::istream& in) {
  return parse_lines<StudentRecord>(in, student_from_json);
}

LoadResult<StudentRecord> load_students(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_students(in);
}

LoadResult<CandidateRecord> parse_candidates(std::istream& in,
                                             const IndustryTaxonomy& taxonomy) {
  return parse_lines<CandidateRecord>(in, [&](const json& j) {
    CandidateRecord r = candidate_from_json(j);
    r.unknown_industry = !taxonomy.contains(r.industry);
    return r;
  });
}

LoadResult<CandidateRecord> load_candidates(const std::filesystem::path& path,
                                            const IndustryTaxonomy& taxonomy) {
  auto in = open_input(path);
  return parse_candidates(in, taxonomy);
}

LoadResult<AttributeProfile> load_profiles(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_lines<AttributeProfile>(in, profile_from_json);
}

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += row.dump();
    out += '\n';
  }
  write_file(path, out);
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<json> rows;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      rows.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("STEM_MATCH_DATA"); env && *env) return env;
  return STEM_MATCH_DATA_DIR;
}

std::string read_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace stem_match
