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

// stem-match command-line driver.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stem_match/pipeline.h"
#include "stem_match/synth.h"

namespace fs = std::filesystem;
using namespace stem_match;

int main(int argc, char** argv) {
  CLI::App app{"Match students with STEM role models"};
  app.require_subcommand(1);

  Resources res;
  auto add_resource = [&](CLI::App* cmd, std::optional<fs::path>& slot, const char* flag,
                          const char* help) {
    cmd->add_option_function<std::string>(flag, [&slot](const std::string& v) { slot = v; }, help);
  };

  // label
  fs::path l_students, l_out;
  auto* label = app.add_subcommand("label", "Weak-label students with regex rules");
  label->add_option("--students", l_students)->required();
  label->add_option("--out", l_out)->required();
  add_resource(label, res.rules, "--rules", "Rule file (defaults to the bundled rules)");

  // classify
  fs::path c_train, c_students, c_out, c_model;
  ClassifyOptions c_opts;
  auto* classify = app.add_subcommand("classify", "Train the college classifier and predict");
  classify->add_option("--train", c_train, "labels.jsonl from `label`")->required();
  classify->add_option("--students", c_students)->required();
  classify->add_option("--out", c_out)->required();
  classify->add_option("--model", c_model, "Model file (default: model.txt beside --out)");
  classify->add_flag("--with-retweet", c_opts.with_retweet);
  classify->add_option("--seed", c_opts.train.seed);
  classify->add_option("--epochs", c_opts.train.epochs)->check(CLI::PositiveNumber);
  classify->add_option("--lambda", c_opts.train.lambda)->check(CLI::PositiveNumber);
  classify->add_option("--folds", c_opts.folds)->check(CLI::Range(2, 1000));

  // identify
  fs::path i_candidates, i_out;
  auto* identify = app.add_subcommand("identify", "Select STEM role models from candidates");
  identify->add_option("--candidates", i_candidates)->required();
  identify->add_option("--out", i_out)->required();
  add_resource(identify, res.taxonomy, "--taxonomy", "Industry taxonomy file");
  add_resource(identify, res.majors, "--majors", "STEM major list");

  // attributes
  fs::path a_in, a_out;
  std::string a_kind;
  std::optional<std::string> a_predicted;
  bool a_no_names = false;
  auto* attributes = app.add_subcommand("attributes", "Resolve attribute profiles");
  attributes->add_option("--in", a_in)->required();
  attributes->add_option("--kind", a_kind)->required()->check(CLI::IsMember({"student", "candidate"}));
  attributes->add_option("--out", a_out)->required();
  attributes->add_option("--predicted", a_predicted, "Keep students predicted college here");
  attributes->add_flag("--no-name-table", a_no_names);
  add_resource(attributes, res.names, "--names", "Name table file");

  // rank
  fs::path r_students, r_models, r_out;
  RankOptions r_opts;
  auto* rank_cmd = app.add_subcommand("rank", "Rank role models for each student");
  rank_cmd->add_option("--students", r_students, "Student profiles")->required();
  rank_cmd->add_option("--rolemodels", r_models, "Role-model profiles")->required();
  rank_cmd->add_option("-k", r_opts.k)->check(CLI::PositiveNumber);
  rank_cmd->add_option("--fuzzy-threshold", r_opts.fuzzy_threshold)->check(CLI::Range(0.0, 1.0));
  rank_cmd->add_option("--threads", r_opts.threads)->check(CLI::PositiveNumber);
  rank_cmd->add_option("--out", r_out)->required();

  // evaluate
  fs::path e_matches, e_gt, e_out;
  std::string e_level = "city-all";
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score matches against annotations");
  evaluate_cmd->add_option("--matches", e_matches)->required();
  evaluate_cmd->add_option("--annotations", e_gt)->required();
  evaluate_cmd->add_option("--level", e_level)
      ->check(CLI::IsMember({"city-all", "state-all", "city-top10", "state-top10"}));
  evaluate_cmd->add_option("--out", e_out)->required();

  // pages
  fs::path p_matches, p_students, p_candidates, p_out;
  std::optional<std::string> p_survey;
  auto* pages = app.add_subcommand("pages", "Write one HTML page per student");
  pages->add_option("--matches", p_matches)->required();
  pages->add_option("--students", p_students)->required();
  pages->add_option("--rolemodels", p_candidates, "Role-model candidate records")->required();
  pages->add_option("--out-dir", p_out)->required();
  pages->add_option("--survey-url", p_survey);

  // pipeline
  fs::path run_config;
  bool force = false;
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage from a config file");
  pipeline->add_option("--config", run_config)->required();
  pipeline->add_flag("--force", force, "Ignore saved stage fingerprints");

  // synth
  std::optional<std::string> s_config;
  fs::path s_out;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic population");
  synth->add_option("--config", s_config, "Overrides for the default population");
  synth->add_option("--out-dir", s_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*label) {
      const auto r = label_stage(l_students, res.load_rules(), l_out, std::cerr);
      std::cout << "college " << r.partition.college.size() << "\nnon-college "
                << r.partition.non_college.size() << "\nunlabeled "
                << r.partition.unlabeled.size() << "\n";
    } else if (*classify) {
      if (c_model.empty()) c_model = c_out.parent_path() / "model.txt";
      const auto r = classify_stage(c_train, c_students, c_out, c_model, c_opts, std::cerr);
      std::cout << "training_examples " << r.training_examples << "\ncv_accuracy "
                << r.cv_accuracy << "\npredicted_college " << r.predicted_college
                << "\npredicted_non_college " << r.predicted_non_college << "\n";
    } else if (*identify) {
      const auto s = identify_stage(i_candidates, res.load_taxonomy(), res.load_majors(), i_out,
                                    std::cerr);
      std::cout << "total " << s.total << "\nstem " << s.stem << "\nstem_related_with_degree "
                << s.stem_related_with_degree << "\nstem_related_without_degree "
                << s.stem_related_without_degree << "\nnon_stem " << s.non_stem
                << "\nunknown_industry " << s.unknown_industry << "\n";
    } else if (*attributes) {
      AttributesOptions opts;
      opts.kind = a_kind == "student" ? ProfileKind::kStudent : ProfileKind::kCandidate;
      if (a_predicted) opts.predicted = *a_predicted;
      const NameTable names = a_no_names ? NameTable() : res.load_names();
      if (!a_no_names) opts.names = &names;
      std::cout << "profiles " << attributes_stage(a_in, a_out, opts, std::cerr) << "\n";
    } else if (*rank_cmd) {
      std::cout << "matched " << rank_stage(r_students, r_models, r_out, r_opts, std::cerr) << "\n";
    } else if (*evaluate_cmd) {
      const auto r = evaluate_stage(e_matches, e_gt, *parse_eval_level(e_level), e_out);
      std::cout << to_json(r).dump(2) << "\n";
    } else if (*pages) {
      const size_t n = pages_stage(p_matches, p_students, p_candidates, p_out, p_survey, std::cerr);
      std::cout << "pages " << n << "\n";
    } else if (*pipeline) {
      PipelineConfig config = load_pipeline_config(run_config);
      config.force = config.force || force;
      const auto s = run_pipeline(config, std::cerr);
      for (const auto& name : s.ran) std::cout << "ran " << name << "\n";
      for (const auto& name : s.skipped) std::cout << "skipped " << name << "\n";
    } else if (*synth) {
      SynthConfig config = default_synth_config();
      if (s_config) config = synth_config_from_json(nlohmann::json::parse(read_file(*s_config)));
      const SynthData data = generate_synthetic(config);
      write_synthetic(data, s_out);
      std::cout << "students " << data.students.size() << "\ncandidates "
                << data.candidates.size() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "stem-match: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
