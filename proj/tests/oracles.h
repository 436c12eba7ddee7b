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

// Reference implementations used as test oracles. They favour obviousness
// over speed and share no code with the library.

#ifndef STEM_MATCH_TESTS_ORACLES_H_
#define STEM_MATCH_TESTS_ORACLES_H_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stem_match/profiles.h"
#include "stem_match/similarity.h"

namespace oracle {

// Edit distance by memoized recursion on suffixes.
inline size_t edit_distance(const std::u32string& a, const std::u32string& b) {
  std::map<std::pair<size_t, size_t>, size_t> memo;
  std::function<size_t(size_t, size_t)> go = [&](size_t i, size_t j) -> size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    size_t best = go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, go(i + 1, j) + 1);
    best = std::min(best, go(i, j + 1) + 1);
    return memo[key] = best;
  };
  return go(0, 0);
}

// Largest matching found by trying every assignment of left vertices.
inline size_t exhaustive_matching(const std::vector<std::vector<bool>>& allowed) {
  const size_t n = allowed.size();
  const size_t m = n ? allowed[0].size() : 0;
  std::vector<bool> used(m, false);
  std::function<size_t(size_t)> go = [&](size_t i) -> size_t {
    if (i == n) return 0;
    size_t best = go(i + 1);
    for (size_t j = 0; j < m; ++j) {
      if (allowed[i][j] && !used[j]) {
        used[j] = true;
        best = std::max(best, 1 + go(i + 1));
        used[j] = false;
      }
    }
    return best;
  };
  return go(0);
}

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  size_t common = 0;
  for (const auto& x : a) common += b.count(x);
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

struct Scored {
  std::string id;
  stem_match::SimilarityBreakdown scores;
};

// Score everything, sort everything, keep k.
inline std::vector<Scored> brute_force_rank(const stem_match::AttributeProfile& student,
                                            const std::vector<stem_match::AttributeProfile>& pool,
                                            size_t k, stem_match::FuzzyThreshold t) {
  std::vector<Scored> all;
  for (const auto& c : pool) all.push_back({c.id, stem_match::combined_score(student, c, t)});
  std::stable_sort(all.begin(), all.end(), [](const Scored& x, const Scored& y) {
    if (x.scores.no_signal != y.scores.no_signal) return !x.scores.no_signal;
    if (x.scores.combined != y.scores.combined) return x.scores.combined > y.scores.combined;
    return x.id < y.id;
  });
  all.resize(std::min(k, all.size()));
  return all;
}

// Random profile over small vocabularies so that ties are common.
inline stem_match::AttributeProfile random_profile(std::mt19937_64& rng, const std::string& id) {
  using namespace stem_match;
  static const std::vector<std::string> kLocations{"boston, ma", "boston", "austin, tx",
                                                   "seattle, wa", "seatle, wa"};
  static const std::vector<std::string> kInterests{
      "robotics", "robotic", "machine learning", "machinelearning", "chess",
      "hiking",   "biology", "biologyrocks",     "art",             "ai"};
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  AttributeProfile p;
  p.id = id;
  if (coin(0.8)) p.gender = coin(0.5) ? Gender::kFemale : Gender::kMale;
  if (coin(0.8)) p.race = static_cast<Race>(std::uniform_int_distribution<int>(0, 4)(rng));
  if (coin(0.8)) p.location = kLocations[std::uniform_int_distribution<size_t>(0, 4)(rng)];
  const int n = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < n; ++i) {
    p.interests.insert(kInterests[std::uniform_int_distribution<size_t>(0, 9)(rng)]);
  }
  return p;
}

// Random string of length <= max_len mixing ASCII, Latin-1, CJK and emoji.
inline std::u32string random_unicode(std::mt19937_64& rng, size_t max_len) {
  static const std::u32string kAlphabet = U"abcxyzAB éü中文\U0001F600\U0001F680";
  const size_t len = std::uniform_int_distribution<size_t>(0, max_len)(rng);
  std::u32string s;
  for (size_t i = 0; i < len; ++i) {
    s.push_back(kAlphabet[std::uniform_int_distribution<size_t>(0, kAlphabet.size() - 1)(rng)]);
  }
  return s;
}

}  // namespace oracle

#endif  // STEM_MATCH_TESTS_ORACLES_H_
