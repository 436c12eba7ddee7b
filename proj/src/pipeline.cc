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

#include "stem_match/pipeline.h"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "stem_match/delivery.h"
#include "stem_match/text.h"

namespace stem_match {

using nlohmann::json;

namespace {

void report_errors(std::ostream& log, const fs::path& file, const std::vector<RecordError>& errors) {
  for (const auto& e : errors) {
    log << file.string() << ":" << e.line;
    if (!e.id.empty()) log << " [" << e.id << "]";
    log << ": " << e.message << "\n";
  }
}

template <typename T>
std::vector<json> to_rows(const std::vector<T>& items) {
  std::vector<json> rows;
  rows.reserve(items.size());
  for (const auto& item : items) rows.push_back(to_json(item));
  return rows;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

fs::path resource_path(const std::optional<fs::path>& override, const char* name) {
  return override ? *override : default_data_dir() / name;
}

// Settings plus the bytes of every input file.
class Fingerprint {
 public:
  Fingerprint& add(std::string_view key, std::string_view value) {
    mix(key);
    mix(value);
    return *this;
  }
  Fingerprint& file(const fs::path& path) {
    std::error_code ec;
    if (!fs::exists(path, ec)) return add(path.filename().string(), "<missing>");
    return add(path.filename().string(), hex64(fnv1a(read_file(path))));
  }
  std::string hex() const { return hex64(hash_); }

 private:
  void mix(std::string_view s) {
    hash_ = fnv1a(s, hash_);
    hash_ = fnv1a(std::string_view("\x1f", 1), hash_);
  }
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string first_token(std::string_view name) {
  const auto tokens = text::alnum_tokens(name);
  return tokens.empty() ? std::string() : std::string(tokens.front());
}

}  // namespace

uint64_t fnv1a(std::string_view data, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RuleSet Resources::load_rules() const { return rules ? RuleSet::load(*rules) : RuleSet::defaults(); }

IndustryTaxonomy Resources::load_taxonomy() const {
  return taxonomy ? IndustryTaxonomy::load(*taxonomy) : IndustryTaxonomy::defaults();
}

StemMajorList Resources::load_majors() const {
  return majors ? StemMajorList::load(*majors) : StemMajorList::defaults();
}

NameTable Resources::load_names() const { return names ? NameTable::load(*names) : NameTable::defaults(); }

LabelStageResult label_stage(const fs::path& students, const RuleSet& rules, const fs::path& out,
                             std::ostream& log) {
  auto loaded = load_students(students);
  report_errors(log, students, loaded.errors);
  const CorpusLabels labels = label_corpus(loaded.records, rules);
  std::vector<json> rows;
  rows.reserve(loaded.records.size());
  for (size_t i = 0; i < loaded.records.size(); ++i) {
    rows.push_back(to_json(LabelRow{loaded.records[i].id, labels.labels[i], std::nullopt}));
  }
  write_jsonl(out, rows);
  return {loaded.records.size(), loaded.errors.size(), labels.partition};
}

ClassifyStageResult classify_stage(const fs::path& labels, const fs::path& students,
                                   const fs::path& out, const fs::path& model_out,
                                   const ClassifyOptions& options, std::ostream& log) {
  auto loaded = load_students(students);
  report_errors(log, students, loaded.errors);

  std::unordered_map<std::string, Label> label_of;
  for (const auto& row : load_labels(labels)) label_of[row.id] = row.effective();

  TrainConfig config = options.train;
  if (options.with_retweet &&
      std::find(config.features.begin(), config.features.end(), Feature::kRetweet) ==
          config.features.end()) {
    config.features.push_back(Feature::kRetweet);
  }

  std::vector<FeatureVector> features(loaded.records.size());
  std::vector<bool> usable(loaded.records.size(), false);
  std::vector<FeatureVector> train_x;
  std::vector<Label> train_y;
  for (size_t i = 0; i < loaded.records.size(); ++i) {
    const auto& r = loaded.records[i];
    if (r.tweets.empty()) {
      log << students.string() << " [" << r.id << "]: no tweets, not classified\n";
      continue;
    }
    features[i] = extract_features(r);
    usable[i] = true;
    auto it = label_of.find(r.id);
    if (it != label_of.end() && it->second != Label::kUnlabeled) {
      train_x.push_back(features[i]);
      train_y.push_back(it->second);
    }
  }

  ClassifyStageResult result;
  result.training_examples = train_x.size();
  result.cv_accuracy = cross_validate(train_x, train_y, options.folds, config);
  ClassifierModel model = train(train_x, train_y, config);
  model.meta.cv_accuracy = result.cv_accuracy;
  save_model(model, model_out);

  std::vector<json> rows;
  for (size_t i = 0; i < loaded.records.size(); ++i) {
    if (!usable[i]) continue;
    const auto inputs = to_inputs(features[i], model.active_features);
    const double d = decision_value(model, inputs);
    const Label l = infer(model, inputs);
    (l == Label::kCollege ? result.predicted_college : result.predicted_non_college)++;
    rows.push_back({{"id", loaded.records[i].id}, {"label", to_string(l)}, {"decision", d}});
  }
  write_jsonl(out, rows);
  return result;
}

RoleModelSummary identify_stage(const fs::path& candidates, const IndustryTaxonomy& taxonomy,
                                const StemMajorList& majors, const fs::path& out,
                                std::ostream& log) {
  auto loaded = load_candidates(candidates, taxonomy);
  report_errors(log, candidates, loaded.errors);
  for (const auto& c : loaded.records) {
    if (c.unknown_industry) {
      log << candidates.string() << " [" << c.id << "]: industry '" << c.industry
          << "' not in taxonomy\n";
    }
  }
  const RoleModelSelection selection = filter_role_models(loaded.records, taxonomy, majors);
  write_jsonl(out, to_rows(selection.role_models));
  return selection.summary;
}

size_t attributes_stage(const fs::path& in, const fs::path& out, const AttributesOptions& options,
                        std::ostream& log) {
  std::vector<AttributeProfile> profiles;
  if (options.kind == ProfileKind::kStudent) {
    std::optional<std::unordered_set<std::string>> keep;
    if (options.predicted) {
      keep.emplace();
      for (const json& row : read_jsonl(*options.predicted)) {
        if (row.at("label").get<std::string>() == to_string(Label::kCollege)) {
          keep->insert(row.at("id").get<std::string>());
        }
      }
    }
    auto loaded = load_students(in);
    report_errors(log, in, loaded.errors);
    for (auto& r : loaded.records) {
      if (keep && !keep->count(r.id)) continue;
      if (options.names) {
        r.predictor_outputs =
            augment_predictions(std::move(r.predictor_outputs), r.display_name, *options.names);
      }
      profiles.push_back(build_profile(r));
    }
  } else {
    auto loaded = load_candidates(in, IndustryTaxonomy::defaults());
    report_errors(log, in, loaded.errors);
    for (auto& c : loaded.records) {
      if (options.names) {
        c.predictor_outputs =
            augment_predictions(std::move(c.predictor_outputs), c.full_name, *options.names);
      }
      profiles.push_back(build_profile(c));
    }
  }
  write_jsonl(out, to_rows(profiles));
  return profiles.size();
}

size_t rank_stage(const fs::path& student_profiles, const fs::path& rolemodel_profiles,
                  const fs::path& out, const RankOptions& options, std::ostream& log) {
  auto students = load_profiles(student_profiles);
  report_errors(log, student_profiles, students.errors);
  auto models = load_profiles(rolemodel_profiles);
  report_errors(log, rolemodel_profiles, models.errors);
  const auto results = match_corpus(students.records, models.records, options.k,
                                    FuzzyThreshold(options.fuzzy_threshold), options.threads);
  write_jsonl(out, to_rows(results));
  return results.size();
}

AccuracyReport evaluate_stage(const fs::path& matches, const fs::path& annotations,
                              EvalLevel level, const fs::path& out) {
  const AccuracyReport report = evaluate(load_matches(matches), load_annotations(annotations), level);
  write_file(out, to_json(report).dump(2) + "\n");
  return report;
}

size_t pages_stage(const fs::path& matches, const fs::path& students, const fs::path& candidates,
                   const fs::path& out_dir, const std::optional<std::string>& survey_url,
                   std::ostream& log) {
  std::unordered_map<std::string, std::string> greeting;
  auto loaded_students = load_students(students);
  report_errors(log, students, loaded_students.errors);
  for (const auto& s : loaded_students.records) greeting[s.id] = first_token(s.display_name);

  std::unordered_map<std::string, CandidateRecord> by_id;
  auto loaded = load_candidates(candidates, IndustryTaxonomy::defaults());
  report_errors(log, candidates, loaded.errors);
  for (auto& c : loaded.records) by_id.emplace(c.id, std::move(c));

  size_t written = 0;
  for (const auto& result : load_matches(matches)) {
    auto it = greeting.find(result.student_id);
    std::string name = it != greeting.end() ? it->second : std::string();
    if (name.empty()) name = result.student_id;
    write_file(out_dir / page_file_name(result.student_id),
               generate_page(result, name, by_id, survey_url));
    ++written;
  }
  return written;
}

PipelineConfig pipeline_config_from_json(const json& j, const fs::path& base) {
  static const std::set<std::string> kKnown{
      "students", "candidates", "annotations", "out_dir",  "rules",         "taxonomy",
      "majors",   "names",      "seed",        "epochs",   "lambda",        "folds",
      "with_retweet", "k",      "fuzzy_threshold", "threads", "levels",     "survey_url",
      "use_name_table", "force"};
  if (!j.is_object()) throw ValidationError("pipeline config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!kKnown.count(key)) throw ValidationError("unknown pipeline config key '" + key + "'");
  }
  auto path = [&](const char* key) -> std::optional<fs::path> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    fs::path p = it->get<std::string>();
    return p.is_absolute() ? p : base / p;
  };
  auto required = [&](const char* key) {
    auto p = path(key);
    if (!p) throw ValidationError(std::string("pipeline config is missing '") + key + "'");
    return *p;
  };

  PipelineConfig c;
  c.students = required("students");
  c.candidates = required("candidates");
  c.annotations = path("annotations");
  c.out_dir = path("out_dir").value_or(base / "out");
  c.resources = {path("rules"), path("taxonomy"), path("majors"), path("names")};
  c.classify.train.seed = j.value("seed", c.classify.train.seed);
  c.classify.train.epochs = j.value("epochs", c.classify.train.epochs);
  c.classify.train.lambda = j.value("lambda", c.classify.train.lambda);
  c.classify.folds = j.value("folds", c.classify.folds);
  c.classify.with_retweet = j.value("with_retweet", false);
  c.rank.k = j.value("k", c.rank.k);
  c.rank.fuzzy_threshold = FuzzyThreshold(j.value("fuzzy_threshold", 0.8)).value();
  c.rank.threads = j.value("threads", 1u);
  if (auto it = j.find("levels"); it != j.end()) {
    c.levels.clear();
    for (const auto& l : *it) {
      auto level = parse_eval_level(l.get<std::string>());
      if (!level) throw ValidationError("unknown evaluation level '" + l.get<std::string>() + "'");
      c.levels.push_back(*level);
    }
  }
  if (auto it = j.find("survey_url"); it != j.end() && !it->is_null()) {
    c.survey_url = it->get<std::string>();
  }
  c.use_name_table = j.value("use_name_table", true);
  c.force = j.value("force", false);
  if (c.rank.k == 0) throw ValidationError("k must be positive");
  if (c.classify.folds < 2) throw ValidationError("folds must be at least 2");
  return c;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return pipeline_config_from_json(j, path.parent_path());
}

PipelineSummary run_pipeline(const PipelineConfig& config, std::ostream& log) {
  const fs::path& out = config.out_dir;
  const fs::path labels = out / "labels.jsonl";
  const fs::path model = out / "model.txt";
  const fs::path predicted = out / "predicted.jsonl";
  const fs::path rolemodels = out / "rolemodels.jsonl";
  const fs::path student_profiles = out / "student_profiles.jsonl";
  const fs::path rolemodel_profiles = out / "rolemodel_profiles.jsonl";
  const fs::path matches = out / "matches.jsonl";
  const fs::path report = out / "report.json";
  const fs::path pages = out / "pages";
  const fs::path state_path = out / "pipeline_state.json";

  const fs::path rules_file = resource_path(config.resources.rules, "rules.jsonl");
  const fs::path taxonomy_file = resource_path(config.resources.taxonomy, "taxonomy.jsonl");
  const fs::path majors_file = resource_path(config.resources.majors, "majors.jsonl");
  const fs::path names_file = resource_path(config.resources.names, "names.jsonl");

  json state = json::object();
  {
    std::error_code ec;
    if (!config.force && fs::exists(state_path, ec)) {
      try {
        state = json::parse(read_file(state_path));
      } catch (const json::exception&) {
        log << state_path.string() << ": unreadable, running every stage\n";
      }
    }
  }
  if (!state.is_object()) state = json::object();

  PipelineSummary summary;
  auto stage = [&](const std::string& name, const Fingerprint& fp,
                   const std::vector<fs::path>& outputs, const auto& body) {
    const std::string key = fp.hex();
    bool fresh = !config.force && state.value(name, std::string()) == key;
    for (const auto& o : outputs) {
      std::error_code ec;
      fresh = fresh && fs::exists(o, ec);
    }
    if (fresh) {
      summary.skipped.push_back(name);
      return;
    }
    try {
      body();
    } catch (const PipelineError&) {
      throw;
    } catch (const std::exception& e) {
      throw PipelineError(name, e.what());
    }
    state[name] = key;
    write_file(state_path, state.dump(2) + "\n");
    summary.ran.push_back(name);
  };

  stage("label", Fingerprint().file(config.students).file(rules_file), {labels}, [&] {
    const auto r = label_stage(config.students, config.resources.load_rules(), labels, log);
    log << "label: " << r.partition.college.size() << " college, "
        << r.partition.non_college.size() << " non-college, " << r.partition.unlabeled.size()
        << " unlabeled\n";
  });

  const auto& t = config.classify;
  stage("classify",
        Fingerprint()
            .file(labels)
            .file(config.students)
            .add("seed", std::to_string(t.train.seed))
            .add("epochs", std::to_string(t.train.epochs))
            .add("lambda", num(t.train.lambda))
            .add("folds", std::to_string(t.folds))
            .add("with_retweet", t.with_retweet ? "1" : "0"),
        {model, predicted}, [&] {
          const auto r = classify_stage(labels, config.students, predicted, model, t, log);
          log << "classify: " << r.training_examples << " training examples, cv accuracy "
              << num(r.cv_accuracy) << ", " << r.predicted_college << " predicted college\n";
        });

  stage("identify", Fingerprint().file(config.candidates).file(taxonomy_file).file(majors_file),
        {rolemodels}, [&] {
          const auto s = identify_stage(config.candidates, config.resources.load_taxonomy(),
                                        config.resources.load_majors(), rolemodels, log);
          log << "identify: " << s.total << " candidates, "
              << s.stem + s.stem_related_with_degree << " role models\n";
        });

  Fingerprint attributes_fp;
  attributes_fp.file(config.students).file(predicted).file(rolemodels);
  attributes_fp.add("use_name_table", config.use_name_table ? "1" : "0");
  if (config.use_name_table) attributes_fp.file(names_file);
  stage("attributes", attributes_fp, {student_profiles, rolemodel_profiles}, [&] {
    const NameTable names =
        config.use_name_table ? config.resources.load_names() : NameTable();
    AttributesOptions opts;
    opts.names = config.use_name_table ? &names : nullptr;
    opts.kind = ProfileKind::kStudent;
    opts.predicted = predicted;
    attributes_stage(config.students, student_profiles, opts, log);
    opts.kind = ProfileKind::kCandidate;
    opts.predicted.reset();
    attributes_stage(rolemodels, rolemodel_profiles, opts, log);
  });

  stage("rank",
        Fingerprint()
            .file(student_profiles)
            .file(rolemodel_profiles)
            .add("k", std::to_string(config.rank.k))
            .add("fuzzy_threshold", num(config.rank.fuzzy_threshold)),
        {matches}, [&] {
          const size_t n = rank_stage(student_profiles, rolemodel_profiles, matches, config.rank, log);
          log << "rank: " << n << " students matched\n";
        });

  if (config.annotations) {
    Fingerprint fp;
    fp.file(matches).file(*config.annotations);
    for (EvalLevel l : config.levels) fp.add("level", to_string(l));
    stage("evaluate", fp, {report}, [&] {
      const auto results = load_matches(matches);
      const auto annotations = load_annotations(*config.annotations);
      json reports = json::array();
      for (EvalLevel l : config.levels) {
        const AccuracyReport r = evaluate(results, annotations, l);
        log << "evaluate: " << to_string(l) << " accuracy@1 " << num(r.accuracy[0]) << "\n";
        reports.push_back(to_json(r));
      }
      write_file(report, json{{"reports", reports}}.dump(2) + "\n");
    });
  }

  Fingerprint pages_fp;
  pages_fp.file(matches).file(config.students).file(rolemodels);
  pages_fp.add("survey_url", config.survey_url.value_or(""));
  stage("pages", pages_fp, {pages}, [&] {
    std::error_code ec;
    fs::remove_all(pages, ec);
    fs::create_directories(pages);
    const size_t n =
        pages_stage(matches, config.students, rolemodels, pages, config.survey_url, log);
    log << "pages: " << n << " written\n";
  });

  return summary;
}

}  // namespace stem_match
