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

#include <algorithm>
#include <cctype>
#include <fstream>

#include "stem_match/text.h"

namespace stem_match {

using nlohmann::json;

namespace {

int source_priority(PredictorSource s) {
  switch (s) {
    case PredictorSource::kNameGender: return 0;
    case PredictorSource::kFace: return 1;
    case PredictorSource::kNameDemographics: return 2;
  }
  return 3;
}

std::optional<ResolvedAttribute> resolve(std::span<const PredictorOutput> outputs,
                                         PredictedAttribute attribute) {
  const PredictorOutput* best = nullptr;
  for (const auto& p : outputs) {
    if (p.attribute != attribute || !p.value || !p.accuracy) continue;
    if (best == nullptr) {
      best = &p;
      continue;
    }
    if (*p.accuracy != *best->accuracy) {
      if (*p.accuracy > *best->accuracy) best = &p;
      continue;
    }
    const int pp = source_priority(p.source);
    const int bp = source_priority(best->source);
    if (pp < bp || (pp == bp && *p.value < *best->value)) best = &p;
  }
  if (best == nullptr) return std::nullopt;
  return ResolvedAttribute{*best->value, std::string(to_string(best->source)), *best->accuracy};
}

std::string normalize_interest(std::string_view raw) {
  std::string s = text::fold_case(text::collapse_whitespace(raw));
  size_t hashes = 0;
  while (hashes < s.size() && s[hashes] == '#') ++hashes;
  s.erase(0, hashes);
  return text::collapse_whitespace(s);
}

std::string name_key(std::string_view s) {
  return text::fold_case(text::collapse_whitespace(s));
}

std::vector<std::string> name_tokens(std::string_view full_name) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : full_name) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u) || c == '\'' || c == '-' || u >= 0x80) {
      cur.push_back(c);
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::optional<double> optional_number(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<double>();
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

std::optional<ResolvedAttribute> resolve_gender(std::span<const PredictorOutput> outputs) {
  return resolve(outputs, PredictedAttribute::kGender);
}

std::optional<ResolvedAttribute> resolve_race(std::span<const PredictorOutput> outputs) {
  return resolve(outputs, PredictedAttribute::kRace);
}

std::optional<std::string> resolve_location(std::string_view raw) {
  std::string s = text::fold_case(text::collapse_whitespace(raw));
  if (s.empty()) return std::nullopt;
  return s;
}

std::set<std::string> extract_student_interests(const StudentRecord& record) {
  std::set<std::string> out;
  for (const Tweet& t : record.tweets) {
    for (const std::string& tag : text::extract_hashtags(t.text)) {
      out.insert(text::fold_case(tag));
    }
  }
  return out;
}

std::set<std::string> extract_candidate_interests(const CandidateRecord& record) {
  std::set<std::string> out;
  for (const auto* list : {&record.interests_raw, &record.skills_raw}) {
    for (const std::string& raw : *list) {
      std::string s = normalize_interest(raw);
      if (!s.empty()) out.insert(std::move(s));
    }
  }
  return out;
}

namespace {

template <typename Record>
AttributeProfile build_common(const Record& record) {
  AttributeProfile p;
  p.id = record.id;
  if (auto g = resolve_gender(record.predictor_outputs)) {
    p.gender = parse_gender(g->value);
    p.gender_provenance = Provenance{g->source, g->accuracy};
  }
  if (auto r = resolve_race(record.predictor_outputs)) {
    p.race = parse_race(r->value);
    p.race_provenance = Provenance{r->source, r->accuracy};
  }
  p.location = resolve_location(record.location_raw);
  return p;
}

}  // namespace

AttributeProfile build_profile(const StudentRecord& record) {
  AttributeProfile p = build_common(record);
  p.interests = extract_student_interests(record);
  return p;
}

AttributeProfile build_profile(const CandidateRecord& record) {
  AttributeProfile p = build_common(record);
  p.interests = extract_candidate_interests(record);
  return p;
}

NameTable NameTable::parse(std::istream& in) {
  NameTable t;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      Entry e;
      e.gender = optional_string(j, "gender");
      e.gender_accuracy = optional_number(j, "gender_accuracy");
      e.race = optional_string(j, "race");
      e.race_accuracy = optional_number(j, "race_accuracy");
      const std::string name = j.at("name").get<std::string>();
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "given") {
        t.add_given(name, std::move(e));
      } else if (kind == "surname") {
        t.add_surname(name, std::move(e));
      } else {
        throw ValidationError("unknown name kind '" + kind + "'");
      }
    } catch (const json::exception& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return t;
}

NameTable NameTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  try {
    return parse(in);
  } catch (const ValidationError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

const NameTable& NameTable::defaults() {
  static const NameTable t = load(default_data_dir() / "names.jsonl");
  return t;
}

void NameTable::add_given(std::string_view name, Entry e) {
  if (e.gender) {
    validate(PredictorOutput{PredictorSource::kNameGender, PredictedAttribute::kGender,
                             e.gender, e.gender_accuracy});
    e.gender = std::string(to_string(*parse_gender(*e.gender)));
  }
  given_[name_key(name)] = std::move(e);
}

void NameTable::add_surname(std::string_view name, Entry e) {
  if (e.race) {
    validate(PredictorOutput{PredictorSource::kNameDemographics, PredictedAttribute::kRace,
                             e.race, e.race_accuracy});
    e.race = std::string(to_string(*parse_race(*e.race)));
  }
  surnames_[name_key(name)] = std::move(e);
}

const NameTable::Entry* NameTable::find_given(std::string_view name) const {
  auto it = given_.find(name_key(name));
  return it == given_.end() ? nullptr : &it->second;
}

const NameTable::Entry* NameTable::find_surname(std::string_view name) const {
  auto it = surnames_.find(name_key(name));
  return it == surnames_.end() ? nullptr : &it->second;
}

std::vector<std::string> NameTable::given_names() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : given_) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> NameTable::surnames() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : surnames_) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PredictorOutput> NameTable::predict(std::string_view full_name) const {
  std::vector<PredictorOutput> out;
  const std::vector<std::string> tokens = name_tokens(full_name);
  if (tokens.empty()) return out;
  PredictorOutput gender{PredictorSource::kNameGender, PredictedAttribute::kGender,
                         std::nullopt, std::nullopt};
  if (const Entry* e = find_given(tokens.front()); e && e->gender) {
    gender.value = e->gender;
    gender.accuracy = e->gender_accuracy.value_or(1.0);
  }
  out.push_back(std::move(gender));
  PredictorOutput race{PredictorSource::kNameDemographics, PredictedAttribute::kRace,
                       std::nullopt, std::nullopt};
  if (tokens.size() >= 2) {
    if (const Entry* e = find_surname(tokens.back()); e && e->race) {
      race.value = e->race;
      race.accuracy = e->race_accuracy.value_or(1.0);
    }
  }
  out.push_back(std::move(race));
  return out;
}

std::vector<PredictorOutput> augment_predictions(std::vector<PredictorOutput> outputs,
                                                 std::string_view full_name,
                                                 const NameTable& names) {
  for (PredictorOutput& p : names.predict(full_name)) {
    const bool present = std::any_of(outputs.begin(), outputs.end(), [&](const auto& o) {
      return o.source == p.source && o.attribute == p.attribute;
    });
    if (!present) outputs.push_back(std::move(p));
  }
  return outputs;
}

}  // namespace stem_match
