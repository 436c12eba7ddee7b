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

#ifndef STEM_MATCH_TEXT_H_
#define STEM_MATCH_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace stem_match::text {

// Decodes UTF-8 into Unicode scalar values. Malformed sequences decode to
// U+FFFD, one replacement per offending byte.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

// Number of Unicode scalar values in `s`.
size_t length_utf8(std::string_view s);

// Lowercases ASCII and Latin-1 letters; everything else passes through.
char32_t fold_case(char32_t c);
std::string fold_case(std::string_view s);

// Trims and collapses runs of whitespace into a single space.
std::string collapse_whitespace(std::string_view s);

// Letters, digits and '_' (approximated for non-ASCII by excluding the
// punctuation, symbol and emoji blocks).
bool is_word_char(char32_t c);

// Emoticons, Misc Symbols and Pictographs, Transport and Map, and
// Supplemental Symbols and Pictographs blocks.
bool is_emoji(char32_t c);

// Hashtag bodies (without '#', original case) in order of appearance.
// A hashtag is '#' followed by one or more word characters, and the '#'
// must not be glued to a preceding word character.
std::vector<std::string> extract_hashtags(std::string_view s);

// Maximal runs of ASCII letters and digits.
std::vector<std::string_view> alnum_tokens(std::string_view s);

}  // namespace stem_match::text

#endif  // STEM_MATCH_TEXT_H_
