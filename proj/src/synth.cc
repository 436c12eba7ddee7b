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

#include "stem_match/synth.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "stem_match/attributes.h"
#include "stem_match/rolemodel.h"
#include "stem_match/text.h"

namespace stem_match {

using nlohmann::json;

namespace {

const char* const kCollegeBios[] = {
    "university '19 | psych major | coffee first",
    "college sophomore at state. dreaming big",
    "undergrad studying hard, living for the weekend",
    "majoring in biology and naps",
    "college '18 | runner | dog person",
    "freshman at the university, go team!",
};
const char* const kNonCollegeBios[] = {
    "professor of biology at a state university",
    "proud father of two. coach. bbq enthusiast",
    "manager of regional sales, opinions my own",
    "retired teacher, gardener, grandmother to four",
    "director of operations. husband. golfer",
};
const char* const kNeutralBios[] = {
    "gardening enthusiast", "coffee. music. sunsets.", "just vibing",
    "sports fan and part-time philosopher", "living one day at a time",
};
const char* const kFillers[] = {
    "what a day", "can't wait for the weekend", "this weather though",
    "need more coffee", "best pizza in town", "listening to the new album",
    "so tired today", "game night with friends", "new shoes who dis",
    "that movie was wild", "happy friday everyone", "studying all night again",
};
const char* const kNoiseTags[] = {"tbt",     "mood",     "nofilter", "tgif",    "blessed",
                                  "squad",   "goals",    "throwback", "weekend", "foodie"};
const char32_t kEmojis[] = {0x1F602, 0x1F60D, 0x1F525, 0x1F389, 0x1F680, 0x1F914, 0x1F64C};
const char* const kNonStemMajors[] = {"English", "History", "Business Administration",
                                      "Marketing", "Communications", "Art History"};

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  bool bernoulli(double p) { return uniform() < p; }
  size_t below(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(engine_);
  }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  size_t weighted(const std::vector<double>& weights) {
    return std::discrete_distribution<size_t>(weights.begin(), weights.end())(engine_);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), engine_);
  }

  // `count` distinct indices below n.
  std::vector<size_t> sample(size_t n, size_t count) {
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    shuffle(idx);
    idx.resize(std::min(count, n));
    std::sort(idx.begin(), idx.end());
    return idx;
  }

 private:
  std::mt19937_64 engine_;
};

std::string padded_id(char prefix, size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%05zu", prefix, n);
  return buf;
}

std::string title_case(std::string s) {
  bool start = true;
  for (char& c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u)) {
      if (start) c = static_cast<char>(std::toupper(u));
      start = false;
    } else {
      start = c == ' ';
    }
  }
  return s;
}

std::string hashtag_form(const std::string& phrase) {
  std::string out;
  for (char c : phrase) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

template <typename T, size_t N>
std::vector<std::string> as_vector(const T (&arr)[N]) {
  return std::vector<std::string>(std::begin(arr), std::end(arr));
}

std::vector<std::string> keys_of(const std::map<std::string, double>& m) {
  std::vector<std::string> out;
  for (const auto& [k, _] : m) out.push_back(k);
  return out;
}

std::vector<double> values_of(const std::map<std::string, double>& m) {
  std::vector<double> out;
  for (const auto& [_, v] : m) out.push_back(v);
  return out;
}

struct NamePools {
  std::map<Gender, std::vector<std::string>> given;
  std::map<Race, std::vector<std::string>> surnames;

  explicit NamePools(const NameTable& table) {
    for (const auto& n : table.given_names()) {
      const auto* e = table.find_given(n);
      if (e && e->gender) given[*parse_gender(*e->gender)].push_back(title_case(n));
    }
    for (const auto& n : table.surnames()) {
      const auto* e = table.find_surname(n);
      if (e && e->race) surnames[*parse_race(*e->race)].push_back(title_case(n));
    }
  }

  std::string name_for(Rng& rng, Gender g, Race r) const {
    return rng.pick(given.at(g)) + " " + rng.pick(surnames.at(r));
  }
};

template <typename Enum>
std::string other_value(Rng& rng, Enum truth, const std::vector<Enum>& all) {
  std::vector<Enum> others;
  for (Enum e : all) {
    if (e != truth) others.push_back(e);
  }
  return std::string(to_string(rng.pick(others)));
}

const std::vector<Gender> kGenders{Gender::kFemale, Gender::kMale};
const std::vector<Race> kRaces{Race::kWhite, Race::kBlack, Race::kAsian, Race::kApi,
                               Race::kHispanic};

PredictorOutput prediction(PredictorSource s, PredictedAttribute a,
                           std::optional<std::string> value, double accuracy) {
  PredictorOutput p{s, a, std::move(value), std::nullopt};
  if (p.value) p.accuracy = std::round(accuracy * 1000.0) / 1000.0;
  return p;
}

// The correct value always carries the highest accuracy; a wrong guess,
// when present, scores strictly lower.
std::vector<PredictorOutput> predictions(Rng& rng, std::optional<Gender> gender,
                                         std::optional<Race> race, double noise) {
  using S = PredictorSource;
  using A = PredictedAttribute;
  std::vector<PredictorOutput> out;
  if (gender) {
    const double acc = rng.uniform(0.85, 0.99);
    out.push_back(prediction(S::kNameGender, A::kGender, std::string(to_string(*gender)), acc));
    if (rng.bernoulli(noise)) {
      out.push_back(prediction(S::kFace, A::kGender, other_value(rng, *gender, kGenders),
                               acc * rng.uniform(0.5, 0.9)));
    } else {
      out.push_back(prediction(S::kFace, A::kGender, std::string(to_string(*gender)),
                               rng.uniform(0.6, 0.95)));
    }
  } else {
    out.push_back(prediction(S::kNameGender, A::kGender, std::nullopt, 0));
    out.push_back(prediction(S::kFace, A::kGender, std::nullopt, 0));
  }
  if (race) {
    const double acc = rng.uniform(0.7, 0.95);
    out.push_back(prediction(S::kFace, A::kRace, std::string(to_string(*race)), acc));
    if (rng.bernoulli(noise)) {
      out.push_back(prediction(S::kNameDemographics, A::kRace, other_value(rng, *race, kRaces),
                               acc * rng.uniform(0.5, 0.9)));
    } else {
      out.push_back(prediction(S::kNameDemographics, A::kRace, std::string(to_string(*race)),
                               rng.uniform(0.5, 0.9)));
    }
  } else {
    out.push_back(prediction(S::kFace, A::kRace, std::nullopt, 0));
    out.push_back(prediction(S::kNameDemographics, A::kRace, std::nullopt, 0));
  }
  return out;
}

std::vector<std::string> pick_interests(Rng& rng, const std::vector<std::string>& vocab,
                                        int lo, int hi) {
  const auto count = static_cast<size_t>(rng.between(lo, hi));
  std::vector<std::string> out;
  for (size_t i : rng.sample(vocab.size(), count)) out.push_back(vocab[i]);
  return out;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(what) + " must lie in [0, 1]");
  }
}

void check_marginals(const std::map<std::string, double>& m, bool gender) {
  if (m.empty()) throw ValidationError("marginals must not be empty");
  double total = 0.0;
  for (const auto& [k, v] : m) {
    const bool known = gender ? parse_gender(k).has_value() : parse_race(k).has_value();
    if (!known) throw ValidationError("unknown category '" + k + "' in marginals");
    check_probability(v, "marginal probability");
    total += v;
  }
  if (!(total > 0.0)) throw ValidationError("marginals sum to zero");
}

}  // namespace

SynthConfig default_synth_config() {
  SynthConfig c;
  c.cities = {
      {"San Francisco", "CA", "California", 3.0}, {"New York City", "NY", "New York", 3.0},
      {"Atlanta", "GA", "Georgia", 2.0},          {"Los Angeles", "CA", "California", 2.0},
      {"Dallas", "TX", "Texas", 2.0},              {"Chicago", "IL", "Illinois", 2.0},
      {"Washington D.C.", "DC", "District of Columbia", 2.0},
      {"Boston", "MA", "Massachusetts", 2.0},      {"Seattle", "WA", "Washington", 2.0},
      {"Houston", "TX", "Texas", 2.0},             {"Round Rock", "TX", "Texas", 1.0},
      {"Rochester", "NY", "New York", 1.0},        {"Buffalo", "NY", "New York", 1.0},
      {"Denver", "CO", "Colorado", 1.0},           {"Phoenix", "AZ", "Arizona", 1.0},
      {"Miami", "FL", "Florida", 1.0},             {"Pittsburgh", "PA", "Pennsylvania", 1.0},
      {"San Diego", "CA", "California", 1.0},      {"McAllen", "TX", "Texas", 1.0},
      {"Portland", "OR", "Oregon", 1.0},
  };
  c.gender_marginals = {{"female", 0.5}, {"male", 0.5}};
  c.race_marginals = {
      {"White", 0.45}, {"Black", 0.15}, {"Asian", 0.2}, {"Api", 0.05}, {"Hispanic", 0.15}};
  c.interests = {
      "computer science", "machine learning",   "data science",      "web development",
      "robotics",         "biology",            "chemistry",         "physics",
      "mathematics",      "astronomy",          "game design",       "cyber security",
      "artificial intelligence", "software engineering", "electrical engineering",
      "mechanical engineering",  "neuroscience", "genetics",         "renewable energy",
      "climate change",   "space exploration",  "photography",       "hiking",
      "basketball",       "soccer",             "music production",  "cooking",
      "travel",           "fashion",            "anime",             "chess",
      "rock climbing",    "yoga",               "film making",       "creative writing",
      "public speaking",  "entrepreneurship",   "volunteering",      "graphic design",
      "3d printing",      "app development",    "open source",       "statistics",
      "economics",        "marine biology",     "environmental science", "video games",
      "drones",           "nutrition",          "running",
  };
  return c;
}

void validate(const SynthConfig& config) {
  if (config.cities.empty()) throw ValidationError("city list is empty");
  double total = 0.0;
  for (const auto& c : config.cities) {
    if (c.city.empty() || c.state.empty()) throw ValidationError("city and state are required");
    if (!(c.weight >= 0.0)) throw ValidationError("city weights must be non-negative");
    total += c.weight;
  }
  if (!(total > 0.0)) throw ValidationError("city weights sum to zero");
  check_marginals(config.gender_marginals, true);
  check_marginals(config.race_marginals, false);
  if (config.interests.empty()) throw ValidationError("interest vocabulary is empty");
  for (const auto& i : config.interests) {
    if (i.empty()) throw ValidationError("empty interest in vocabulary");
  }
  check_probability(config.planted_fraction, "planted_fraction");
  check_probability(config.college_fraction, "college_fraction");
  check_probability(config.missingness.gender, "missingness.gender");
  check_probability(config.missingness.race, "missingness.race");
  check_probability(config.missingness.location, "missingness.location");
  check_probability(config.missingness.interests, "missingness.interests");
  if (config.tweets_per_student < 1) throw ValidationError("tweets_per_student must be >= 1");
  const auto planted = static_cast<size_t>(
      std::llround(config.planted_fraction * static_cast<double>(config.students)));
  if (planted > config.candidates) {
    throw ValidationError("more planted students than candidates");
  }
}

SynthConfig synth_config_from_json(const json& j) {
  SynthConfig c = default_synth_config();
  c.seed = j.value("seed", c.seed);
  c.students = j.value("students", c.students);
  c.candidates = j.value("candidates", c.candidates);
  if (auto it = j.find("cities"); it != j.end()) {
    c.cities.clear();
    for (const json& e : *it) {
      SynthCity city;
      city.city = e.at("city").get<std::string>();
      city.state = e.at("state").get<std::string>();
      city.state_name = e.value("state_name", city.state);
      city.weight = e.value("weight", 1.0);
      c.cities.push_back(std::move(city));
    }
  }
  if (auto it = j.find("gender_marginals"); it != j.end()) {
    c.gender_marginals = it->get<std::map<std::string, double>>();
  }
  if (auto it = j.find("race_marginals"); it != j.end()) {
    c.race_marginals = it->get<std::map<std::string, double>>();
  }
  if (auto it = j.find("interests"); it != j.end()) {
    c.interests = it->get<std::vector<std::string>>();
  }
  c.planted_fraction = j.value("planted_fraction", c.planted_fraction);
  c.college_fraction = j.value("college_fraction", c.college_fraction);
  c.tweets_per_student = j.value("tweets_per_student", c.tweets_per_student);
  if (auto it = j.find("missingness"); it != j.end()) {
    c.missingness.gender = it->value("gender", 0.0);
    c.missingness.race = it->value("race", 0.0);
    c.missingness.location = it->value("location", 0.0);
    c.missingness.interests = it->value("interests", 0.0);
  }
  validate(c);
  return c;
}

json to_json(const SynthConfig& c) {
  json cities = json::array();
  for (const auto& city : c.cities) {
    cities.push_back({{"city", city.city},
                      {"state", city.state},
                      {"state_name", city.state_name},
                      {"weight", city.weight}});
  }
  return {{"seed", c.seed},
          {"students", c.students},
          {"candidates", c.candidates},
          {"cities", std::move(cities)},
          {"gender_marginals", c.gender_marginals},
          {"race_marginals", c.race_marginals},
          {"interests", c.interests},
          {"planted_fraction", c.planted_fraction},
          {"college_fraction", c.college_fraction},
          {"tweets_per_student", c.tweets_per_student},
          {"missingness",
           {{"gender", c.missingness.gender},
            {"race", c.missingness.race},
            {"location", c.missingness.location},
            {"interests", c.missingness.interests}}}};
}

SynthData generate_synthetic(const SynthConfig& config) {
  validate(config);
  Rng rng(config.seed);
  const NamePools names(NameTable::defaults());
  const IndustryTaxonomy& taxonomy = IndustryTaxonomy::defaults();
  const StemMajorList& majors = StemMajorList::defaults();

  std::vector<double> city_weights;
  for (const auto& c : config.cities) city_weights.push_back(c.weight);
  const std::vector<std::string> gender_keys = keys_of(config.gender_marginals);
  const std::vector<double> gender_weights = values_of(config.gender_marginals);
  const std::vector<std::string> race_keys = keys_of(config.race_marginals);
  const std::vector<double> race_weights = values_of(config.race_marginals);

  std::map<IndustryGroup, std::vector<std::string>> industries;
  for (const auto& e : taxonomy.entries()) industries[e.group].push_back(e.name);
  const std::vector<std::string>& stem_majors = majors.canonical_names();
  const std::vector<std::string> fillers = as_vector(kFillers);
  const std::vector<std::string> noise_tags = as_vector(kNoiseTags);

  struct Truth {
    Gender gender;
    Race race;
    size_t city;
    bool gender_missing, race_missing, location_missing, interests_missing;
    std::vector<std::string> interests;
  };

  SynthData data;
  std::vector<Truth> student_truth;
  student_truth.reserve(config.students);

  for (size_t i = 0; i < config.students; ++i) {
    Truth t{*parse_gender(gender_keys[rng.weighted(gender_weights)]),
            *parse_race(race_keys[rng.weighted(race_weights)]),
            rng.weighted(city_weights),
            rng.bernoulli(config.missingness.gender),
            rng.bernoulli(config.missingness.race),
            rng.bernoulli(config.missingness.location),
            rng.bernoulli(config.missingness.interests),
            {}};
    if (!t.interests_missing) t.interests = pick_interests(rng, config.interests, 3, 5);

    StudentRecord r;
    r.id = padded_id('s', i + 1);
    r.display_name = names.name_for(rng, t.gender, t.race);
    const bool college = rng.bernoulli(config.college_fraction);
    const double bio_roll = rng.uniform();
    if (college) {
      r.bio = bio_roll < 0.8 ? kCollegeBios[rng.below(std::size(kCollegeBios))]
                             : kNeutralBios[rng.below(std::size(kNeutralBios))];
    } else {
      r.bio = bio_roll < 0.6 ? kNonCollegeBios[rng.below(std::size(kNonCollegeBios))]
                             : kNeutralBios[rng.below(std::size(kNeutralBios))];
    }
    const SynthCity& city = config.cities[t.city];
    if (!t.location_missing) {
      switch (rng.below(3)) {
        case 0: r.location_raw = city.city + ", " + city.state; break;
        case 1: r.location_raw = city.city + ", " + city.state_name; break;
        default: r.location_raw = city.city; break;
      }
    }

    // Each interest hashtag appears in some tweet; a few noise tags too.
    std::vector<std::string> tags;
    for (const auto& interest : t.interests) tags.push_back(hashtag_form(interest));
    if (!t.interests_missing) {
      const auto noise = static_cast<size_t>(rng.between(0, 2));
      for (size_t k : rng.sample(noise_tags.size(), noise)) tags.push_back(noise_tags[k]);
    }
    const double emoji_p = college ? 0.45 : 0.12;
    const double haha_p = college ? 0.3 : 0.05;
    const double tag_p = college ? 0.15 : 0.35;
    for (int k = 0; k < config.tweets_per_student; ++k) {
      Tweet tw;
      tw.text = rng.pick(fillers);
      if (rng.bernoulli(haha_p)) tw.text = (rng.bernoulli(0.5) ? "HAHAHA " : "LOL ") + tw.text;
      if (rng.bernoulli(emoji_p)) tw.text += " " + text::encode_utf8(std::u32string(1, kEmojis[rng.below(std::size(kEmojis))]));
      if (static_cast<size_t>(k) < tags.size()) {
        tw.text += " #" + tags[static_cast<size_t>(k)];
      } else if (!t.interests_missing && !tags.empty() && rng.bernoulli(tag_p)) {
        tw.text += " #" + rng.pick(tags);
      }
      if (rng.bernoulli(0.3)) tw.text = "RT @" + rng.pick(names.given.begin()->second) + ": " + tw.text;
      r.tweets.push_back(std::move(tw));
    }
    r.predictor_outputs =
        predictions(rng, t.gender_missing ? std::nullopt : std::optional<Gender>(t.gender),
                    t.race_missing ? std::nullopt : std::optional<Race>(t.race), 0.2);
    data.students.push_back(std::move(r));
    student_truth.push_back(std::move(t));
  }

  const auto planted_count = static_cast<size_t>(
      std::llround(config.planted_fraction * static_cast<double>(config.students)));
  const std::vector<size_t> planted = rng.sample(config.students, planted_count);

  struct PendingCandidate {
    CandidateRecord record;
    Truth truth;
    std::optional<size_t> planted_for;
  };
  std::vector<PendingCandidate> pending;
  pending.reserve(config.candidates);

  auto make_candidate = [&](Truth t, std::vector<std::string> interests,
                            IndustryGroup group, std::optional<size_t> planted_for) {
    PendingCandidate p;
    p.truth = std::move(t);
    p.planted_for = planted_for;
    CandidateRecord& c = p.record;
    c.full_name = names.name_for(rng, p.truth.gender, p.truth.race);
    c.industry = rng.pick(industries[group]);
    if (group == IndustryGroup::kStemRelated && rng.bernoulli(0.5)) {
      c.education_majors.push_back(rng.pick(stem_majors));
    } else if (rng.bernoulli(0.5)) {
      c.education_majors.push_back(group == IndustryGroup::kStem
                                       ? rng.pick(stem_majors)
                                       : std::string(kNonStemMajors[rng.below(std::size(kNonStemMajors))]));
    }
    const SynthCity& city = config.cities[p.truth.city];
    c.location_raw = city.city + ", " + city.state;
    if (!p.truth.interests_missing) {
      for (size_t k = 0; k < interests.size(); ++k) {
        auto& list = k % 2 == 0 ? c.skills_raw : c.interests_raw;
        list.push_back(rng.bernoulli(0.5) ? title_case(interests[k]) : interests[k]);
      }
    }
    c.predictor_outputs = predictions(
        rng, p.truth.gender_missing ? std::nullopt : std::optional<Gender>(p.truth.gender),
        p.truth.race_missing ? std::nullopt : std::optional<Race>(p.truth.race), 0.05);
    p.truth.interests = std::move(interests);
    pending.push_back(std::move(p));
  };

  for (size_t s : planted) {
    const Truth& st = student_truth[s];
    Truth t{st.gender, st.race, st.city, false, false, false, false, {}};
    std::vector<std::string> interests = st.interests;
    if (interests.empty() || rng.bernoulli(0.5)) {
      std::string extra = rng.pick(config.interests);
      if (std::find(interests.begin(), interests.end(), extra) == interests.end()) {
        interests.push_back(std::move(extra));
      }
    }
    make_candidate(std::move(t), std::move(interests), IndustryGroup::kStem, s);
  }
  while (pending.size() < config.candidates) {
    Truth t{*parse_gender(gender_keys[rng.weighted(gender_weights)]),
            *parse_race(race_keys[rng.weighted(race_weights)]),
            rng.weighted(city_weights),
            rng.bernoulli(config.missingness.gender),
            rng.bernoulli(config.missingness.race),
            false,
            rng.bernoulli(config.missingness.interests),
            {}};
    const double roll = rng.uniform();
    const IndustryGroup group = roll < 0.6    ? IndustryGroup::kStem
                                : roll < 0.85 ? IndustryGroup::kStemRelated
                                              : IndustryGroup::kNonStem;
    make_candidate(std::move(t), pick_interests(rng, config.interests, 3, 6), group,
                   std::nullopt);
  }
  rng.shuffle(pending);

  std::vector<std::optional<std::string>> planted_id(config.students);
  for (size_t i = 0; i < pending.size(); ++i) {
    CandidateRecord& c = pending[i].record;
    c.id = padded_id('c', i + 1);
    c.profile_url = "https://www.linkedin.com/in/" + c.id;
    if (pending[i].planted_for) planted_id[*pending[i].planted_for] = c.id;
  }

  for (size_t i = 0; i < data.students.size(); ++i) {
    const Truth& t = student_truth[i];
    const SynthCity& city = config.cities[t.city];
    GroundTruthAnnotation a;
    a.subject_id = data.students[i].id;
    a.kind = GroundTruthAnnotation::Kind::kStudent;
    if (!t.gender_missing) a.gender = t.gender;
    if (!t.race_missing) a.race = t.race;
    if (!t.location_missing) {
      a.city = city.city;
      a.state = city.state;
    }
    a.planted_candidate_id = planted_id[i];
    data.annotations.push_back(std::move(a));
  }
  for (auto& p : pending) {
    const SynthCity& city = config.cities[p.truth.city];
    GroundTruthAnnotation a;
    a.subject_id = p.record.id;
    a.kind = GroundTruthAnnotation::Kind::kCandidate;
    a.gender = p.truth.gender;
    a.race = p.truth.race;
    a.city = city.city;
    a.state = city.state;
    a.is_stem_role_model = is_role_model(p.record, taxonomy, majors).is_role_model;
    data.annotations.push_back(std::move(a));
    data.candidates.push_back(std::move(p.record));
  }
  return data;
}

void write_synthetic(const SynthData& data, const std::filesystem::path& dir) {
  std::vector<json> rows;
  rows.reserve(data.students.size());
  for (const auto& s : data.students) rows.push_back(to_json(s));
  write_jsonl(dir / "students.jsonl", rows);
  rows.clear();
  for (const auto& c : data.candidates) rows.push_back(to_json(c));
  write_jsonl(dir / "candidates.jsonl", rows);
  rows.clear();
  for (const auto& a : data.annotations) rows.push_back(to_json(a));
  write_jsonl(dir / "gt.jsonl", rows);
}

}  // namespace stem_match
