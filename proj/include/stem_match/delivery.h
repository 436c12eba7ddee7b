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

#ifndef STEM_MATCH_DELIVERY_H_
#define STEM_MATCH_DELIVERY_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stem_match/matcher.h"
#include "stem_match/profiles.h"

namespace stem_match {

struct PageEntry {
  std::string display_name;
  std::string profile_url;
  std::string industry;
  std::string location;
};

struct PageSpec {
  std::string student_id;
  std::string greeting_name;
  std::vector<PageEntry> entries;
  std::optional<std::string> survey_url;
};

// http(s) URL with a host and no whitespace, quotes or angle brackets.
bool is_valid_url(std::string_view url);

// The candidate's profile_url, or a LinkedIn /in/ URL built from the id.
std::string profile_url_for(const CandidateRecord& candidate);

std::string html_escape(std::string_view s);

// Throws MatchError when a ranked id has no candidate record, and
// ValidationError on an invalid URL or an empty result.
PageSpec make_page_spec(const MatchResult& result, std::string_view greeting_name,
                        const std::unordered_map<std::string, CandidateRecord>& candidates,
                        const std::optional<std::string>& survey_url);

std::string render_page(const PageSpec& page);

// make_page_spec followed by render_page.
std::string generate_page(const MatchResult& result, std::string_view greeting_name,
                          const std::unordered_map<std::string, CandidateRecord>& candidates,
                          const std::optional<std::string>& survey_url = std::nullopt);

// File name for a student's page. Characters outside [A-Za-z0-9._-] are
// percent-encoded.
std::string page_file_name(std::string_view student_id);

}  // namespace stem_match

#endif  // STEM_MATCH_DELIVERY_H_
