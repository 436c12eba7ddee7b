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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.h"
#include "stem_match/attributes.h"
#include "stem_match/classifier.h"
#include "stem_match/matcher.h"
#include "stem_match/pipeline.h"
#include "stem_match/similarity.h"
#include "stem_match/synth.h"
#include "stem_match/text.h"

namespace {

using namespace stem_match;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (o.ok && secs > budget_s) {
    o.ok = false;
    o.detail = "over time budget";
  }
  failures += !o.ok;
  std::printf("%s [%d] %s (%.3fs of %.3fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, budget_s,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome spot_check() {
  Outcome o;
  const double s = lev_similarity(std::string_view("computersciencelife"), std::string_view("computer science"));
  o.require(std::abs(s - 30.0 / 35.0) <= 1e-12, fmt("got %.17g", s));
  o.require(std::round(s * 100) / 100 == 0.86, "does not round to 0.86");
  return o;
}

Outcome edit_distance_oracle() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const auto a = oracle::random_unicode(rng, 12);
    const auto b = oracle::random_unicode(rng, 12);
    const size_t want = oracle::edit_distance(a, b);
    o.require(levenshtein(a, b) == want, "mismatch on pair " + std::to_string(i));
    o.require(levenshtein(text::encode_utf8(a), text::encode_utf8(b)) == want,
              "UTF-8 mismatch on pair " + std::to_string(i));
  }
  return o;
}

Outcome jaccard_and_matching() {
  Outcome o;
  std::mt19937_64 rng(99);
  const std::vector<std::string> vocab{"ai", "art", "chess", "robotics", "robotic", "music",
                                       "go", "hiking", "yoga", "biology"};
  auto random_set = [&](size_t max) {
    std::set<std::string> s;
    const size_t n = 1 + rng() % max;
    while (s.size() < n) s.insert(vocab[rng() % vocab.size()]);
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = random_set(6), b = random_set(6);
    o.require(*interest_similarity(a, b, FuzzyThreshold(1.0)) == oracle::jaccard(a, b),
              "Jaccard mismatch on case " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    const auto a = random_set(6), b = random_set(6);
    const double t = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
    std::vector<std::vector<bool>> allowed;
    for (const auto& x : a) {
      allowed.emplace_back();
      for (const auto& y : b) {
        const auto ux = text::decode_utf8(x), uy = text::decode_utf8(y);
        const double total = static_cast<double>(ux.size() + uy.size());
        allowed.back().push_back((total - oracle::edit_distance(ux, uy)) / total >= t);
      }
    }
    o.require(fuzzy_overlap(a, b, FuzzyThreshold(t)) == oracle::exhaustive_matching(allowed),
              "matching count mismatch on case " + std::to_string(i));
  }
  return o;
}

Outcome ranking_oracle() {
  Outcome o;
  size_t ties = 0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    std::vector<AttributeProfile> pool, students;
    for (int i = 0; i < 200; ++i) pool.push_back(oracle::random_profile(rng, "c" + std::to_string(i)));
    for (int i = 0; i < 50; ++i) students.push_back(oracle::random_profile(rng, "s" + std::to_string(i)));
    for (const auto& s : students) {
      const MatchResult got = rank(s, pool, kDefaultTopK);
      const auto want = oracle::brute_force_rank(s, pool, kDefaultTopK, FuzzyThreshold());
      o.require(got.ranked.size() == want.size(), "size mismatch");
      for (size_t i = 0; i < want.size() && i < got.ranked.size(); ++i) {
        o.require(got.ranked[i].candidate_id == want[i].id && got.ranked[i].scores == want[i].scores,
                  "order mismatch for " + s.id + " seed " + std::to_string(seed));
        if (i > 0) ties += want[i].scores.combined == want[i - 1].scores.combined;
      }
    }
  }
  o.require(ties > 0, "no tie cases exercised");
  return o;
}

Outcome planted_recovery() {
  Outcome o;
  SynthConfig c = default_synth_config();
  c.seed = 42;
  c.students = 1000;
  c.candidates = 5000;
  c.planted_fraction = 1.0;
  c.missingness = {};
  const SynthData d = generate_synthetic(c);
  std::vector<AttributeProfile> students, candidates;
  for (const auto& s : d.students) students.push_back(build_profile(s));
  for (const auto& m : d.candidates) candidates.push_back(build_profile(m));
  const auto results = match_corpus(students, candidates, kDefaultTopK, FuzzyThreshold(), 1);
  std::map<std::string, std::string> planted;
  for (const auto& a : d.annotations) {
    if (a.planted_candidate_id) planted[a.subject_id] = *a.planted_candidate_id;
  }
  size_t top5 = 0, top1 = 0;
  for (const auto& r : results) {
    const std::string& want = planted.at(r.student_id);
    for (size_t i = 0; i < r.ranked.size(); ++i) {
      if (r.ranked[i].candidate_id != want) continue;
      ++top5;
      top1 += i == 0;
    }
  }
  const double f5 = top5 / 1000.0, f1 = top1 / 1000.0;
  o.require(f5 >= 0.95 && f1 >= 0.80, fmt("top-5 %.3f, rank-1 %.3f", f5, f1));
  if (o.ok) o.detail = fmt("top-5 %.3f, rank-1 %.3f", f5, f1);
  return o;
}

GroundTruthAnnotation gt(std::string id, GroundTruthAnnotation::Kind kind, std::string city,
                         std::string state, bool stem = true) {
  GroundTruthAnnotation a;
  a.subject_id = std::move(id);
  a.kind = kind;
  a.gender = Gender::kFemale;
  a.race = Race::kAsian;
  a.city = std::move(city);
  a.state = std::move(state);
  a.is_stem_role_model = stem;
  return a;
}

Outcome accuracy_arithmetic() {
  using K = GroundTruthAnnotation::Kind;
  Outcome o;
  AnnotationSet set;
  set.add(gt("hit", K::kCandidate, "Atlanta", "GA"));
  set.add(gt("state-only", K::kCandidate, "Savannah", "GA"));
  set.add(gt("miss", K::kCandidate, "Atlanta", "GA", false));
  std::vector<MatchResult> results;
  // The first 840 students get 1 to 5 city-level hits. The rest get none at
  // city level and two at state level.
  std::array<size_t, 5> expected_city{};
  for (int i = 0; i < 2000; ++i) {
    MatchResult r{"s" + std::to_string(i), {}};
    const int hits = i < 840 ? 1 + i % 5 : 0;
    for (int k = 0; k < 5; ++k) {
      const char* id = k < hits ? "hit" : (k % 2 ? "state-only" : "miss");
      r.ranked.push_back({id, {}});
    }
    for (int n = 1; n <= 5; ++n) expected_city[static_cast<size_t>(n - 1)] += hits >= n;
    results.push_back(r);
    set.add(gt(r.student_id, K::kStudent, "Atlanta", "GA"));
  }
  const auto city = evaluate(results, set, EvalLevel::kCityAll);
  const auto state = evaluate(results, set, EvalLevel::kStateAll);
  o.require(city.accuracy[0] == 0.42, fmt("accuracy at n=1 is %.17g", city.accuracy[0]));
  for (size_t n = 0; n < 5; ++n) {
    o.require(city.accuracy[n] == static_cast<double>(expected_city[n]) / 2000.0,
              "city accuracy wrong at n=" + std::to_string(n + 1));
    o.require(state.accuracy[n] >= city.accuracy[n], "state < city at n=" + std::to_string(n + 1));
  }
  const auto city10 = evaluate(results, set, EvalLevel::kCityTop10);
  const auto state10 = evaluate(results, set, EvalLevel::kStateTop10);
  for (size_t n = 0; n < 5; ++n) {
    o.require(state10.accuracy[n] >= city10.accuracy[n], "top-10 state < city");
  }
  return o;
}

FeatureVector features(int emoji, int hashtag, int hahalol, int retweet) {
  FeatureVector f;
  f.emoji_bin = emoji;
  f.hashtag_bin = hashtag;
  f.hahalol_bin = hahalol;
  f.retweet_bin = retweet;
  return f;
}

int clamp_bin(double v) { return std::clamp(static_cast<int>(std::lround(v)), 0, 9); }

// Overlapping classes: college leans to emoji and HAHA/LOL, non-college to
// hashtags. The retweet bin ignores the label.
void noisy_population(std::mt19937_64& rng, size_t n, std::vector<FeatureVector>& x,
                      std::vector<Label>& y) {
  std::normal_distribution<double> noise(0.0, 2.0);
  std::uniform_int_distribution<int> any(0, 9);
  for (size_t i = 0; i < n; ++i) {
    const bool college = i % 2 == 0;
    x.push_back(features(clamp_bin((college ? 5.5 : 3.5) + noise(rng)),
                         clamp_bin((college ? 3.5 : 5.0) + noise(rng)),
                         clamp_bin((college ? 4.5 : 3.0) + noise(rng)), any(rng)));
    y.push_back(college ? Label::kCollege : Label::kNonCollege);
  }
}

Outcome classifier_sanity() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::vector<FeatureVector> x;
  std::vector<Label> y;
  std::uniform_int_distribution<int> hi(6, 9), lo(0, 3), any(0, 9);
  for (int i = 0; i < 200; ++i) {
    const bool college = i % 2 == 0;
    x.push_back(features(college ? hi(rng) : lo(rng), any(rng), any(rng), any(rng)));
    y.push_back(college ? Label::kCollege : Label::kNonCollege);
  }
  const double separable = cross_validate(x, y, 10);
  o.require(separable == 1.0, fmt("separable CV %.4f", separable));

  x.clear();
  y.clear();
  noisy_population(rng, 400, x, y);
  std::shuffle(y.begin(), y.end(), rng);
  const double shuffled = cross_validate(x, y, 10);
  o.require(std::abs(shuffled - 0.5) <= 0.1, fmt("shuffled-label CV %.4f", shuffled));

  double base = 0.0, with_retweet = 0.0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 r(seed);
    x.clear();
    y.clear();
    noisy_population(r, 300, x, y);
    TrainConfig cfg;
    cfg.seed = seed;
    base += cross_validate(x, y, 10, cfg) / 20.0;
    cfg.features.push_back(Feature::kRetweet);
    with_retweet += cross_validate(x, y, 10, cfg) / 20.0;
  }
  o.require(with_retweet <= base, fmt("retweet raised mean CV %.4f -> %.4f", base, with_retweet));
  if (o.ok) {
    o.detail = fmt("shuffled %.3f; mean CV %.4f without retweet, %.4f with", shuffled, base,
                   with_retweet);
  }
  return o;
}

std::map<std::string, std::string> snapshot(const std::filesystem::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      files[std::filesystem::relative(e.path(), root).string()] = read_file(e.path());
    }
  }
  return files;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "stem_match_acceptance";
  fs::remove_all(dir);
  SynthConfig c = default_synth_config();
  c.students = 300;
  c.candidates = 1500;
  c.missingness = {0.1, 0.1, 0.1, 0.1};
  write_synthetic(generate_synthetic(c), dir / "data");
  std::ostringstream log;
  for (const char* out : {"run1", "run2"}) {
    const nlohmann::json j{{"students", "data/students.jsonl"},
                           {"candidates", "data/candidates.jsonl"},
                           {"annotations", "data/gt.jsonl"},
                           {"out_dir", out},
                           {"threads", std::string(out) == "run1" ? 1 : 4},
                           {"survey_url", "https://survey.example.org/stem"}};
    run_pipeline(pipeline_config_from_json(j, dir), log);
  }
  const auto a = snapshot(dir / "run1"), b = snapshot(dir / "run2");
  size_t pages = 0;
  for (const auto& [name, _] : a) pages += name.rfind("pages/", 0) == 0;
  o.require(pages > 0, "no pages written");
  o.require(a.size() >= 10, "missing artifacts");
  o.require(a == b, "artifacts differ between runs");
  if (o.ok) o.detail = std::to_string(a.size()) + " files identical";
  fs::remove_all(dir);
  return o;
}

Outcome missing_attribute_contract() {
  Outcome o;
  AttributeProfile student;
  student.id = "s";
  student.gender = Gender::kFemale;
  student.race = Race::kHispanic;
  student.location = "mcallen, tx";
  student.interests = {"computersciencelife", "soccer", "anime"};
  std::vector<AttributeProfile> models(3);
  models[0] = {"m0", Gender::kFemale, Race::kHispanic, "mcallen, tx", {"computer science"}, {}, {}};
  models[1] = {"m1", Gender::kMale, Race::kHispanic, "mcallentx", {"soccer", "animé", "chess"}, {}, {}};
  models[2] = {"m2", Gender::kMale, Race::kWhite, std::nullopt, {"robotics"}, {}, {}};
  // Hand-derived components: race, location, interest.
  const std::array<std::array<std::optional<double>, 3>, 3> expected{{
      {1.0, 1.0, 1.0 / 3.0},
      {1.0, 18.0 / 20.0, 2.0 / 4.0},
      {0.0, std::nullopt, 0.0 / 4.0},
  }};
  AttributeProfile no_gender = student;
  no_gender.gender.reset();
  for (size_t i = 0; i < models.size(); ++i) {
    const auto s = combined_score(no_gender, models[i]);
    o.require(!s.gender, "gender still present");
    double sum = 0;
    int n = 0;
    for (const auto& v : expected[i]) {
      if (v) sum += *v, ++n;
    }
    const double want = sum / n;
    o.require(s.race == expected[i][0] && s.location == expected[i][1] && s.interest == expected[i][2],
              "component mismatch for " + models[i].id);
    o.require(s.combined == want, fmt("combined %.17g, want %.17g", s.combined, want));
    const auto with_gender = combined_score(student, models[i]);
    o.require(with_gender.combined != s.combined || *with_gender.gender == want,
              "dropping gender had no effect");
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "lev_similarity spot check", 0.001, spot_check);
  criterion(2, "edit distance agrees with oracle on 1000 Unicode pairs", 5.0, edit_distance_oracle);
  criterion(3, "exact threshold gives Jaccard; matching count agrees with enumeration", 60.0,
            jaccard_and_matching);
  criterion(4, "rank agrees with full-sort oracle, 50 x 200 x 10 seeds", 10.0, ranking_oracle);
  criterion(5, "planted match recovery, 1000 students x 5000 candidates", 60.0, planted_recovery);
  criterion(6, "accuracy arithmetic and state >= city", 60.0, accuracy_arithmetic);
  criterion(7, "classifier cross-validation sanity", 120.0, classifier_sanity);
  criterion(8, "pipeline reruns are byte-identical", 120.0, determinism);
  criterion(9, "missing gender averages the remaining components", 60.0, missing_attribute_contract);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
