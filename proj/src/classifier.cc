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

#include "stem_match/classifier.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "stem_match/text.h"

namespace stem_match {

namespace {

constexpr std::array<Feature, 4> kAllFeatures{Feature::kEmoji, Feature::kHashtag,
                                              Feature::kHahaLol, Feature::kRetweet};

bool is_haha(std::string_view tok) {
  // (HA){2,}H?
  size_t reps = 0;
  size_t i = 0;
  while (i + 1 < tok.size() && tok[i] == 'H' && tok[i + 1] == 'A') {
    ++reps;
    i += 2;
  }
  if (i < tok.size() && tok[i] == 'H') ++i;
  return reps >= 2 && i == tok.size();
}

bool is_lol(std::string_view tok) {
  if (tok.size() < 3 || tok.front() != 'L' || tok.back() != 'L') return false;
  return std::all_of(tok.begin() + 1, tok.end() - 1, [](char c) { return c == 'O'; });
}

int sign_of(Label l) {
  switch (l) {
    case Label::kCollege: return 1;
    case Label::kNonCollege: return -1;
    case Label::kUnlabeled: break;
  }
  throw TrainingError("training labels must be college or non-college");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::kEmoji: return "emoji";
    case Feature::kHashtag: return "hashtag";
    case Feature::kHahaLol: return "hahalol";
    case Feature::kRetweet: return "retweet";
  }
  return "?";
}

std::optional<Feature> parse_feature(std::string_view s) {
  for (Feature f : kAllFeatures) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

int frequency_bin(size_t count, size_t total) {
  if (total == 0) throw FeatureError("frequency over zero tweets");
  return static_cast<int>(std::min<size_t>(count * kNumBins / total, kNumBins - 1));
}

int frequency_bin(double frequency) {
  const double clamped = std::clamp(frequency, 0.0, 1.0);
  return std::min(static_cast<int>(std::floor(clamped * kNumBins)), kNumBins - 1);
}

bool contains_emoji(std::string_view tweet) {
  const std::u32string cps = text::decode_utf8(tweet);
  return std::any_of(cps.begin(), cps.end(), [](char32_t c) { return text::is_emoji(c); });
}

bool contains_hashtag(std::string_view tweet) {
  return !text::extract_hashtags(tweet).empty();
}

bool contains_hahalol(std::string_view tweet) {
  for (std::string_view tok : text::alnum_tokens(tweet)) {
    if (is_haha(tok) || is_lol(tok)) return true;
  }
  return false;
}

bool is_retweet(const Tweet& tweet) {
  return tweet.is_retweet || tweet.text.starts_with("RT @");
}

int FeatureVector::bin(Feature f) const {
  switch (f) {
    case Feature::kEmoji: return emoji_bin;
    case Feature::kHashtag: return hashtag_bin;
    case Feature::kHahaLol: return hahalol_bin;
    case Feature::kRetweet:
      if (!retweet_bin) throw FeatureError("feature vector has no retweet bin");
      return *retweet_bin;
  }
  return 0;
}

FeatureVector extract_features(const StudentRecord& record) {
  const size_t n = record.tweets.size();
  if (n == 0) throw FeatureError("record '" + record.id + "' has no tweets");
  std::array<size_t, 4> counts{};
  for (const Tweet& t : record.tweets) {
    counts[0] += contains_emoji(t.text);
    counts[1] += contains_hashtag(t.text);
    counts[2] += contains_hahalol(t.text);
    counts[3] += is_retweet(t);
  }
  FeatureVector f;
  for (size_t i = 0; i < 4; ++i) {
    f.raw_frequencies[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  f.emoji_bin = frequency_bin(counts[0], n);
  f.hashtag_bin = frequency_bin(counts[1], n);
  f.hahalol_bin = frequency_bin(counts[2], n);
  f.retweet_bin = frequency_bin(counts[3], n);
  return f;
}

std::vector<double> to_inputs(const FeatureVector& f, std::span<const Feature> active) {
  std::vector<double> x;
  x.reserve(active.size());
  for (Feature a : active) x.push_back(f.bin(a) / static_cast<double>(kNumBins - 1));
  return x;
}

double svm_objective(std::span<const double> weights,
                     const std::vector<std::vector<double>>& inputs,
                     std::span<const int> signs, double lambda) {
  const size_t d = weights.size() - 1;
  double hinge = 0.0;
  for (size_t i = 0; i < inputs.size(); ++i) {
    const double score = dot(weights.first(d), inputs[i]) + weights[d];
    hinge += std::max(0.0, 1.0 - signs[i] * score);
  }
  const double norm2 = dot(weights, weights);
  return 0.5 * lambda * norm2 + hinge / static_cast<double>(inputs.size());
}

ClassifierModel train(const std::vector<FeatureVector>& features,
                      const std::vector<Label>& labels, const TrainConfig& config) {
  if (features.size() != labels.size()) {
    throw TrainingError("feature and label counts differ");
  }
  if (config.features.empty()) throw TrainingError("no active features");
  if (config.epochs < 1) throw TrainingError("epochs must be positive");
  if (!(config.lambda > 0.0)) throw TrainingError("lambda must be positive");

  std::vector<int> signs;
  signs.reserve(labels.size());
  for (Label l : labels) signs.push_back(sign_of(l));
  const auto positives = std::count(signs.begin(), signs.end(), 1);
  const auto negatives = static_cast<long>(signs.size()) - positives;
  if (positives < 2 || negatives < 2) {
    throw TrainingError("training needs at least two examples of each class");
  }

  std::vector<std::vector<double>> inputs;
  inputs.reserve(features.size());
  for (const auto& f : features) inputs.push_back(to_inputs(f, config.features));

  const size_t d = config.features.size();
  const double n = static_cast<double>(inputs.size());
  const double radius = 1.0 / std::sqrt(config.lambda);

  std::vector<double> w(d + 1, 0.0);
  std::vector<double> best = w;
  double best_objective = svm_objective(w, inputs, signs, config.lambda);
  std::vector<double> history;
  history.reserve(static_cast<size_t>(config.epochs));
  std::vector<double> violation_sum(d + 1);

  for (int t = 1; t <= config.epochs; ++t) {
    std::fill(violation_sum.begin(), violation_sum.end(), 0.0);
    for (size_t i = 0; i < inputs.size(); ++i) {
      const double score = dot(std::span(w).first(d), inputs[i]) + w[d];
      if (signs[i] * score < 1.0) {
        for (size_t j = 0; j < d; ++j) violation_sum[j] += signs[i] * inputs[i][j];
        violation_sum[d] += signs[i];
      }
    }
    const double step = 1.0 / (config.lambda * t);
    for (size_t j = 0; j <= d; ++j) {
      const double grad = config.lambda * w[j] - violation_sum[j] / n;
      w[j] -= step * grad;
    }
    const double norm = std::sqrt(dot(w, w));
    if (norm > radius) {
      for (double& v : w) v *= radius / norm;
    }
    const double objective = svm_objective(w, inputs, signs, config.lambda);
    if (objective < best_objective) {
      best_objective = objective;
      best = w;
    }
    history.push_back(best_objective);
  }

  ClassifierModel model;
  model.active_features = config.features;
  model.weights = std::move(best);
  model.meta.seed = config.seed;
  model.meta.epochs = config.epochs;
  model.meta.lambda = config.lambda;
  model.meta.objective_history = std::move(history);
  return model;
}

std::vector<int> assign_folds(size_t n, int k, uint64_t seed) {
  if (k < 2) throw TrainingError("cross-validation needs k >= 2");
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> fold(n);
  for (size_t i = 0; i < n; ++i) fold[order[i]] = static_cast<int>(i % static_cast<size_t>(k));
  return fold;
}

double cross_validate(const std::vector<FeatureVector>& features,
                      const std::vector<Label>& labels, int k, const TrainConfig& config) {
  if (k < 2) throw TrainingError("cross-validation needs k >= 2");
  if (features.size() != labels.size()) {
    throw TrainingError("feature and label counts differ");
  }
  if (features.size() < static_cast<size_t>(k)) {
    throw TrainingError("fewer examples than folds");
  }
  const std::vector<int> fold = assign_folds(features.size(), k, config.seed);
  double total = 0.0;
  for (int f = 0; f < k; ++f) {
    std::vector<FeatureVector> train_x;
    std::vector<Label> train_y;
    std::vector<size_t> held_out;
    for (size_t i = 0; i < features.size(); ++i) {
      if (fold[i] == f) {
        held_out.push_back(i);
      } else {
        train_x.push_back(features[i]);
        train_y.push_back(labels[i]);
      }
    }
    const ClassifierModel model = train(train_x, train_y, config);
    size_t correct = 0;
    for (size_t i : held_out) correct += infer(model, features[i]) == labels[i];
    total += static_cast<double>(correct) / static_cast<double>(held_out.size());
  }
  return total / k;
}

double decision_value(const ClassifierModel& model, std::span<const double> inputs) {
  if (model.weights.size() != model.active_features.size() + 1) {
    throw FeatureError("model weight count does not match its feature list");
  }
  if (inputs.size() != model.active_features.size()) {
    throw FeatureError("expected " + std::to_string(model.active_features.size()) +
                       " inputs, got " + std::to_string(inputs.size()));
  }
  return dot(std::span(model.weights).first(inputs.size()), inputs) + model.bias();
}

Label infer(const ClassifierModel& model, std::span<const double> inputs) {
  return decision_value(model, inputs) >= 0.0 ? Label::kCollege : Label::kNonCollege;
}

Label infer(const ClassifierModel& model, const FeatureVector& features) {
  return infer(model, to_inputs(features, model.active_features));
}

std::string format_model(const ClassifierModel& model) {
  std::ostringstream out;
  out << "stem-match-linear-model 1\n";
  out << "features";
  for (Feature f : model.active_features) out << ' ' << to_string(f);
  out << "\nweights";
  for (size_t i = 0; i + 1 < model.weights.size(); ++i) {
    out << ' ' << format_double(model.weights[i]);
  }
  out << "\nbias " << format_double(model.bias()) << '\n';
  out << "seed " << model.meta.seed << '\n';
  out << "epochs " << model.meta.epochs << '\n';
  out << "lambda " << format_double(model.meta.lambda) << '\n';
  if (model.meta.cv_accuracy) {
    out << "cv_accuracy " << format_double(*model.meta.cv_accuracy) << '\n';
  }
  return out.str();
}

ClassifierModel parse_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "stem-match-linear-model 1") {
    throw DataError("not a stem-match model file");
  }
  ClassifierModel model;
  std::vector<double> weights;
  std::optional<double> bias;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    if (key == "features") {
      std::string name;
      while (fields >> name) {
        const auto f = parse_feature(name);
        if (!f) throw DataError("unknown feature '" + name + "' in model file");
        model.active_features.push_back(*f);
      }
    } else if (key == "weights") {
      double v;
      while (fields >> v) weights.push_back(v);
    } else if (key == "bias") {
      double v;
      if (!(fields >> v)) throw DataError("bad bias line in model file");
      bias = v;
    } else if (key == "seed") {
      fields >> model.meta.seed;
    } else if (key == "epochs") {
      fields >> model.meta.epochs;
    } else if (key == "lambda") {
      fields >> model.meta.lambda;
    } else if (key == "cv_accuracy") {
      double v;
      if (fields >> v) model.meta.cv_accuracy = v;
    }
  }
  if (!bias) throw DataError("model file has no bias");
  if (weights.size() != model.active_features.size() || weights.empty()) {
    throw DataError("model file weight count does not match its features");
  }
  weights.push_back(*bias);
  model.weights = std::move(weights);
  return model;
}

void save_model(const ClassifierModel& model, const std::filesystem::path& path) {
  write_file(path, format_model(model));
}

ClassifierModel load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path));
}

}  // namespace stem_match
