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

#include "stem_match/delivery.h"

#include <cctype>
#include <cstdio>
#include <regex>

namespace stem_match {

namespace {

std::string percent_encode(std::string_view s) {
  std::string out;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '-' || c == '_' || c == '.') {
      out.push_back(c);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", u);
      out += buf;
    }
  }
  return out;
}

}  // namespace

bool is_valid_url(std::string_view url) {
  static const std::regex re(R"(^https?://[A-Za-z0-9.-]+(:[0-9]+)?(/[^\s"'<>]*)?$)");
  return std::regex_match(url.begin(), url.end(), re);
}

std::string profile_url_for(const CandidateRecord& candidate) {
  if (candidate.profile_url) return *candidate.profile_url;
  return "https://www.linkedin.com/in/" + percent_encode(candidate.id);
}

std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string page_file_name(std::string_view student_id) {
  return percent_encode(student_id) + ".html";
}

PageSpec make_page_spec(const MatchResult& result, std::string_view greeting_name,
                        const std::unordered_map<std::string, CandidateRecord>& candidates,
                        const std::optional<std::string>& survey_url) {
  if (result.ranked.empty()) {
    throw ValidationError("no ranked role models for '" + result.student_id + "'");
  }
  PageSpec page;
  page.student_id = result.student_id;
  page.greeting_name = greeting_name.empty() ? result.student_id : std::string(greeting_name);
  for (const RankedEntry& e : result.ranked) {
    auto it = candidates.find(e.candidate_id);
    if (it == candidates.end()) {
      throw MatchError("no candidate record for '" + e.candidate_id + "'");
    }
    const CandidateRecord& c = it->second;
    PageEntry entry{c.full_name.empty() ? c.id : c.full_name, profile_url_for(c), c.industry,
                    c.location_raw};
    if (!is_valid_url(entry.profile_url)) {
      throw ValidationError("invalid profile URL '" + entry.profile_url + "'");
    }
    page.entries.push_back(std::move(entry));
  }
  if (survey_url) {
    if (!is_valid_url(*survey_url)) {
      throw ValidationError("invalid survey URL '" + *survey_url + "'");
    }
    page.survey_url = survey_url;
  }
  return page;
}

std::string render_page(const PageSpec& page) {
  const std::string name = html_escape(page.greeting_name);
  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  html += "<meta name=\"student-id\" content=\"" + html_escape(page.student_id) + "\">\n";
  html += "<title>STEM role models for " + name + "</title>\n";
  html +=
      "<style>\n"
      "body { font-family: sans-serif; max-width: 40em; margin: 2em auto; }\n"
      "ol.role-models li { margin: 0.8em 0; }\n"
      ".detail { color: #555; display: block; font-size: 0.9em; }\n"
      "</style>\n";
  html += "</head>\n<body>\n";
  html += "<h1>Hi " + name + "!</h1>\n";
  html +=
      "<p>These people work in science, technology, engineering and math, and share "
      "some of your background and interests. Have a look at their profiles.</p>\n";
  html += "<ol class=\"role-models\">\n";
  for (const PageEntry& e : page.entries) {
    html += "<li><a href=\"" + html_escape(e.profile_url) + "\">" +
            html_escape(e.display_name) + "</a>";
    html += "<span class=\"detail\">" + html_escape(e.industry);
    if (!e.location.empty()) html += " &middot; " + html_escape(e.location);
    html += "</span></li>\n";
  }
  html += "</ol>\n";
  if (page.survey_url) {
    html += "<p class=\"survey\">Were these good suggestions? <a href=\"" +
            html_escape(*page.survey_url) + "\">Tell us in a short survey</a>.</p>\n";
  }
  html += "</body>\n</html>\n";
  return html;
}

std::string generate_page(const MatchResult& result, std::string_view greeting_name,
                          const std::unordered_map<std::string, CandidateRecord>& candidates,
                          const std::optional<std::string>& survey_url) {
  return render_page(make_page_spec(result, greeting_name, candidates, survey_url));
}

}  // namespace stem_match
