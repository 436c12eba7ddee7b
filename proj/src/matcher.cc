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

#include "stem_match/matcher.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "stem_match/bipartite.h"
#include "stem_match/text.h"

namespace stem_match {

using nlohmann::json;

namespace {

std::string place_key(std::string_view s) {
  return text::fold_case(text::collapse_whitespace(s));
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> optional_double(const json& j, const char* key) {
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

bool ranks_before(const RankedEntry& a, const RankedEntry& b) {
  if (a.scores.no_signal != b.scores.no_signal) return !a.scores.no_signal;
  if (a.scores.combined != b.scores.combined) return a.scores.combined > b.scores.combined;
  return a.candidate_id < b.candidate_id;
}

struct Ranker::Index {
  FuzzyThreshold threshold;
  std::vector<AttributeProfile> candidates;
  std::vector<std::u32string> locations;     // distinct candidate locations
  std::vector<int32_t> location_of;          // per candidate, -1 if absent
  std::vector<std::u32string> interests;     // distinct candidate interests
  std::vector<std::vector<uint32_t>> interest_ids;  // per candidate
};

Ranker::Ranker(std::vector<AttributeProfile> candidates, FuzzyThreshold t)
    : index_(std::make_unique<Index>()) {
  Index& ix = *index_;
  ix.threshold = t;
  ix.candidates = std::move(candidates);
  std::unordered_map<std::string, int32_t> location_ids;
  std::unordered_map<std::string, uint32_t> interest_ids;
  ix.location_of.reserve(ix.candidates.size());
  ix.interest_ids.reserve(ix.candidates.size());
  for (const AttributeProfile& c : ix.candidates) {
    if (c.location) {
      auto [it, inserted] =
          location_ids.emplace(*c.location, static_cast<int32_t>(ix.locations.size()));
      if (inserted) ix.locations.push_back(text::decode_utf8(*c.location));
      ix.location_of.push_back(it->second);
    } else {
      ix.location_of.push_back(-1);
    }
    auto& ids = ix.interest_ids.emplace_back();
    ids.reserve(c.interests.size());
    for (const std::string& s : c.interests) {
      auto [it, inserted] =
          interest_ids.emplace(s, static_cast<uint32_t>(ix.interests.size()));
      if (inserted) ix.interests.push_back(text::decode_utf8(s));
      ids.push_back(it->second);
    }
  }
}

Ranker::~Ranker() = default;
Ranker::Ranker(Ranker&&) noexcept = default;
Ranker& Ranker::operator=(Ranker&&) noexcept = default;

size_t Ranker::size() const { return index_->candidates.size(); }
FuzzyThreshold Ranker::threshold() const { return index_->threshold; }

std::vector<SimilarityBreakdown> Ranker::score_all(const AttributeProfile& student) const {
  const Index& ix = *index_;

  std::vector<double> location_sim;
  if (student.location) {
    const std::u32string loc = text::decode_utf8(*student.location);
    location_sim.reserve(ix.locations.size());
    for (const auto& l : ix.locations) location_sim.push_back(lev_similarity(loc, l));
  }

  // similar[i][v]: student interest i reaches the threshold with vocabulary
  // entry v.
  const size_t vocab = ix.interests.size();
  std::vector<std::vector<bool>> similar;
  similar.reserve(student.interests.size());
  std::vector<bool> any_similar(vocab, false);
  for (const std::string& s : student.interests) {
    const std::u32string mine = text::decode_utf8(s);
    auto& row = similar.emplace_back(vocab, false);
    for (size_t v = 0; v < vocab; ++v) {
      if (lev_similar(mine, ix.interests[v], ix.threshold.value())) {
        row[v] = true;
        any_similar[v] = true;
      }
    }
  }

  std::vector<SimilarityBreakdown> out;
  out.reserve(ix.candidates.size());
  std::vector<std::vector<uint32_t>> adjacency(similar.size());
  for (size_t c = 0; c < ix.candidates.size(); ++c) {
    const AttributeProfile& cand = ix.candidates[c];
    std::optional<double> location;
    if (student.location && ix.location_of[c] >= 0) {
      location = location_sim[static_cast<size_t>(ix.location_of[c])];
    }
    std::optional<double> interest;
    const auto& ids = ix.interest_ids[c];
    if (!student.interests.empty() && !ids.empty()) {
      size_t overlap = 0;
      if (std::any_of(ids.begin(), ids.end(), [&](uint32_t v) { return any_similar[v]; })) {
        for (size_t i = 0; i < similar.size(); ++i) {
          adjacency[i].clear();
          for (uint32_t j = 0; j < ids.size(); ++j) {
            if (similar[i][ids[j]]) adjacency[i].push_back(j);
          }
        }
        overlap = maximum_matching(adjacency, ids.size()).size;
      }
      interest = static_cast<double>(overlap) /
                 static_cast<double>(student.interests.size() + ids.size() - overlap);
    }
    out.push_back(combine(categorical_similarity(student.gender, cand.gender),
                          categorical_similarity(student.race, cand.race), location,
                          interest));
  }
  return out;
}

MatchResult Ranker::rank(const AttributeProfile& student, size_t k) const {
  if (index_->candidates.empty()) throw MatchError("no role models to rank");
  if (k == 0) throw MatchError("k must be positive");
  std::vector<SimilarityBreakdown> scores = score_all(student);
  std::vector<RankedEntry> entries;
  entries.reserve(scores.size());
  for (size_t c = 0; c < scores.size(); ++c) {
    entries.push_back({index_->candidates[c].id, scores[c]});
  }
  const size_t take = std::min(k, entries.size());
  std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(take),
                    entries.end(), ranks_before);
  entries.resize(take);
  return {student.id, std::move(entries)};
}

MatchResult rank(const AttributeProfile& student,
                 const std::vector<AttributeProfile>& candidates, size_t k, FuzzyThreshold t) {
  if (candidates.empty()) throw MatchError("no role models to rank");
  return Ranker(candidates, t).rank(student, k);
}

std::vector<MatchResult> match_corpus(const std::vector<AttributeProfile>& students,
                                      const std::vector<AttributeProfile>& candidates,
                                      size_t k, FuzzyThreshold t, unsigned threads) {
  std::vector<MatchResult> results(students.size());
  if (students.empty()) return results;
  if (candidates.empty()) throw MatchError("no role models to rank");
  if (k == 0) throw MatchError("k must be positive");
  const Ranker ranker(candidates, t);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, students.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < students.size(); ++i) results[i] = ranker.rank(students[i], k);
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < students.size(); i = next++) {
        results[i] = ranker.rank(students[i], k);
      }
    });
  }
  pool.clear();  // joins
  return results;
}

json to_json(const MatchResult& r) {
  json ranked = json::array();
  for (const RankedEntry& e : r.ranked) {
    ranked.push_back({{"candidate_id", e.candidate_id},
                      {"gender", optional_json(e.scores.gender)},
                      {"race", optional_json(e.scores.race)},
                      {"location", optional_json(e.scores.location)},
                      {"interest", optional_json(e.scores.interest)},
                      {"combined", e.scores.combined},
                      {"no_signal", e.scores.no_signal}});
  }
  return {{"student_id", r.student_id}, {"ranked", std::move(ranked)}};
}

MatchResult match_result_from_json(const json& j) {
  MatchResult r;
  r.student_id = j.at("student_id").get<std::string>();
  std::unordered_set<std::string> seen;
  for (const json& e : j.at("ranked")) {
    RankedEntry entry;
    entry.candidate_id = e.at("candidate_id").get<std::string>();
    if (!seen.insert(entry.candidate_id).second) {
      throw ValidationError("duplicate candidate '" + entry.candidate_id + "' in ranking");
    }
    entry.scores.gender = optional_double(e, "gender");
    entry.scores.race = optional_double(e, "race");
    entry.scores.location = optional_double(e, "location");
    entry.scores.interest = optional_double(e, "interest");
    entry.scores.combined = e.at("combined").get<double>();
    entry.scores.no_signal = e.at("no_signal").get<bool>();
    r.ranked.push_back(std::move(entry));
  }
  return r;
}

std::vector<MatchResult> load_matches(const std::filesystem::path& path) {
  std::vector<MatchResult> out;
  size_t row = 0;
  for (const json& j : read_jsonl(path)) {
    ++row;
    try {
      out.push_back(match_result_from_json(j));
    } catch (const std::exception& e) {
      throw DataError(path.string() + ": row " + std::to_string(row) + ": " + e.what());
    }
  }
  return out;
}

std::string_view to_string(EvalLevel l) {
  switch (l) {
    case EvalLevel::kCityAll: return "city-all";
    case EvalLevel::kStateAll: return "state-all";
    case EvalLevel::kCityTop10: return "city-top10";
    case EvalLevel::kStateTop10: return "state-top10";
  }
  return "?";
}

std::optional<EvalLevel> parse_eval_level(std::string_view s) {
  for (EvalLevel l : kAllEvalLevels) {
    if (s == to_string(l)) return l;
  }
  return std::nullopt;
}

const std::vector<std::string>& default_top_cities() {
  static const std::vector<std::string> cities{
      "San Francisco", "New York City", "Atlanta", "Los Angeles", "Dallas",
      "Chicago",       "Washington D.C.", "Boston", "Seattle",   "Houston"};
  return cities;
}

json to_json(const GroundTruthAnnotation& a) {
  const bool student = a.kind == GroundTruthAnnotation::Kind::kStudent;
  json j;
  j["kind"] = student ? "student" : "candidate";
  j["subject_id"] = a.subject_id;
  j["gender"] = a.gender ? json(to_string(*a.gender)) : json(nullptr);
  j["race"] = a.race ? json(to_string(*a.race)) : json(nullptr);
  j["city"] = a.city ? json(*a.city) : json(nullptr);
  j["state"] = a.state ? json(*a.state) : json(nullptr);
  if (!student) j["is_stem_role_model"] = a.is_stem_role_model;
  if (a.planted_candidate_id) j["planted_candidate_id"] = *a.planted_candidate_id;
  return j;
}

GroundTruthAnnotation annotation_from_json(const json& j) {
  GroundTruthAnnotation a;
  a.subject_id = j.at("subject_id").get<std::string>();
  if (a.subject_id.empty()) throw ValidationError("empty subject_id");
  const std::string kind = j.value("kind", "student");
  if (kind == "student") {
    a.kind = GroundTruthAnnotation::Kind::kStudent;
  } else if (kind == "candidate") {
    a.kind = GroundTruthAnnotation::Kind::kCandidate;
  } else {
    throw ValidationError("unknown annotation kind '" + kind + "'");
  }
  if (auto g = optional_string(j, "gender")) {
    a.gender = parse_gender(*g);
    if (!a.gender) throw ValidationError("unknown gender '" + *g + "'");
  }
  if (auto r = optional_string(j, "race")) {
    a.race = parse_race(*r);
    if (!a.race) throw ValidationError("unknown race '" + *r + "'");
  }
  a.city = optional_string(j, "city");
  a.state = optional_string(j, "state");
  if ((a.city && a.city->empty()) || (a.state && a.state->empty())) {
    throw ValidationError("city/state must be null or nonempty");
  }
  a.is_stem_role_model = j.value("is_stem_role_model", false);
  a.planted_candidate_id = optional_string(j, "planted_candidate_id");
  return a;
}

void AnnotationSet::add(GroundTruthAnnotation a) {
  auto& map = a.kind == GroundTruthAnnotation::Kind::kStudent ? students : candidates;
  const std::string id = a.subject_id;
  if (!map.emplace(id, std::move(a)).second) {
    throw ValidationError("duplicate annotation for '" + id + "'");
  }
}

AnnotationSet load_annotations(const std::filesystem::path& path) {
  AnnotationSet set;
  size_t row = 0;
  for (const json& j : read_jsonl(path)) {
    ++row;
    try {
      set.add(annotation_from_json(j));
    } catch (const std::exception& e) {
      throw DataError(path.string() + ": row " + std::to_string(row) + ": " + e.what());
    }
  }
  return set;
}

bool is_correct_match(const GroundTruthAnnotation& student,
                      const GroundTruthAnnotation& candidate, EvalLevel level) {
  if (!candidate.is_stem_role_model) return false;
  if (!student.gender || !student.race || !student.city || !student.state) return false;
  if (candidate.gender != student.gender || candidate.race != student.race) return false;
  const bool city_level = level == EvalLevel::kCityAll || level == EvalLevel::kCityTop10;
  const auto& mine = city_level ? student.city : student.state;
  const auto& theirs = city_level ? candidate.city : candidate.state;
  return theirs && place_key(*mine) == place_key(*theirs);
}

AccuracyReport evaluate(const std::vector<MatchResult>& results,
                        const AnnotationSet& annotations, EvalLevel level,
                        const std::vector<std::string>& top_cities) {
  std::vector<std::string> missing;
  for (const MatchResult& r : results) {
    if (!annotations.students.contains(r.student_id)) missing.push_back(r.student_id);
    const size_t n = std::min(kEvaluatedRanks, r.ranked.size());
    for (size_t i = 0; i < n; ++i) {
      if (!annotations.candidates.contains(r.ranked[i].candidate_id)) {
        missing.push_back(r.ranked[i].candidate_id);
      }
    }
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    std::string msg = "no annotation for:";
    for (const auto& id : missing) msg += " " + id;
    throw MatchError(msg);
  }

  std::unordered_set<std::string> top;
  for (const auto& c : top_cities) top.insert(place_key(c));
  const bool top_only = level == EvalLevel::kCityTop10 || level == EvalLevel::kStateTop10;

  AccuracyReport report;
  report.level = level;
  for (const MatchResult& r : results) {
    const GroundTruthAnnotation& student = annotations.students.at(r.student_id);
    if (top_only && (!student.city || !top.contains(place_key(*student.city)))) continue;
    ++report.cohort_size;
    const size_t n = std::min(kEvaluatedRanks, r.ranked.size());
    size_t correct = 0;
    bool all_no_signal = true;
    for (size_t i = 0; i < n; ++i) {
      const RankedEntry& e = r.ranked[i];
      all_no_signal = all_no_signal && e.scores.no_signal;
      correct += is_correct_match(student, annotations.candidates.at(e.candidate_id), level);
    }
    if (all_no_signal) ++report.no_signal_students;
    for (size_t k = 0; k < correct; ++k) ++report.students_at_least[k];
  }
  for (size_t k = 0; k < kEvaluatedRanks; ++k) {
    report.accuracy[k] = report.cohort_size == 0
                             ? 0.0
                             : static_cast<double>(report.students_at_least[k]) /
                                   static_cast<double>(report.cohort_size);
  }
  return report;
}

json to_json(const AccuracyReport& r) {
  return {{"level", to_string(r.level)},
          {"cohort_size", r.cohort_size},
          {"accuracy_at_least", r.accuracy},
          {"students_at_least", r.students_at_least},
          {"no_signal_students", r.no_signal_students}};
}

}  // namespace stem_match
