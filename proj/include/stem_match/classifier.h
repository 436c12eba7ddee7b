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

#ifndef STEM_MATCH_CLASSIFIER_H_
#define STEM_MATCH_CLASSIFIER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stem_match/labeler.h"
#include "stem_match/profiles.h"

namespace stem_match {

class FeatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Feature { kEmoji = 0, kHashtag = 1, kHahaLol = 2, kRetweet = 3 };

std::string_view to_string(Feature f);
std::optional<Feature> parse_feature(std::string_view s);

inline constexpr int kNumBins = 10;

// Equal-width 0.1 bins: min(floor(10 * count / total), 9). Integer
// arithmetic, so 0.3 lands in bin 3 exactly.
int frequency_bin(size_t count, size_t total);
int frequency_bin(double frequency);

// Per-tweet feature detectors.
bool contains_emoji(std::string_view tweet);
bool contains_hashtag(std::string_view tweet);
// Whole alphanumeric token, case-sensitive: (HA){2,}H? or LO+L.
bool contains_hahalol(std::string_view tweet);
// Starts with "RT @" or carries the retweet flag.
bool is_retweet(const Tweet& tweet);

struct FeatureVector {
  int emoji_bin = 0;
  int hashtag_bin = 0;
  int hahalol_bin = 0;
  std::optional<int> retweet_bin;
  // emoji, hashtag, hahalol, retweet
  std::array<double, 4> raw_frequencies{};

  // Throws FeatureError if the feature is retweet and retweet_bin is unset.
  int bin(Feature f) const;
};

// Relative frequency of each feature over the record's tweets, and its bin.
// Throws FeatureError when the record has no tweets.
FeatureVector extract_features(const StudentRecord& record);

struct TrainConfig {
  uint64_t seed = 42;
  int epochs = 200;
  double lambda = 0.01;
  std::vector<Feature> features{Feature::kEmoji, Feature::kHashtag, Feature::kHahaLol};
};

struct TrainingMeta {
  uint64_t seed = 42;
  int epochs = 0;
  double lambda = 0.01;
  std::optional<double> cv_accuracy;
  // Objective of the retained model after each epoch.
  std::vector<double> objective_history;
};

// Linear max-margin model over bins rescaled to [0,1]. `weights` holds one
// entry per active feature followed by the bias.
struct ClassifierModel {
  std::vector<Feature> active_features;
  std::vector<double> weights;
  TrainingMeta meta;

  double bias() const { return weights.back(); }
};

// Bins of the active features divided by 9.
std::vector<double> to_inputs(const FeatureVector& f, std::span<const Feature> active);

// Regularized hinge objective: lambda/2 |w|^2 + mean(max(0, 1 - y w.x)).
double svm_objective(std::span<const double> weights,
                     const std::vector<std::vector<double>>& inputs,
                     std::span<const int> signs, double lambda);

// Full-batch subgradient descent on the regularized hinge loss with step
// 1/(lambda t), keeping the best iterate seen. Labels must be college or
// non-college with at least two of each.
ClassifierModel train(const std::vector<FeatureVector>& features,
                      const std::vector<Label>& labels, const TrainConfig& config = {});

// Mean held-out accuracy over k seeded folds.
double cross_validate(const std::vector<FeatureVector>& features,
                      const std::vector<Label>& labels, int k = 10,
                      const TrainConfig& config = {});

// Fold index of each example: a seeded shuffle dealt round-robin into k folds.
std::vector<int> assign_folds(size_t n, int k, uint64_t seed);

double decision_value(const ClassifierModel& model, std::span<const double> inputs);
// Non-negative scores are college.
Label infer(const ClassifierModel& model, std::span<const double> inputs);
Label infer(const ClassifierModel& model, const FeatureVector& features);

// Plain-text model file.
std::string format_model(const ClassifierModel& model);
ClassifierModel parse_model(std::string_view text);
void save_model(const ClassifierModel& model, const std::filesystem::path& path);
ClassifierModel load_model(const std::filesystem::path& path);

}  // namespace stem_match

#endif  // STEM_MATCH_CLASSIFIER_H_
