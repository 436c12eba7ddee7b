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

#include "stem_match/text.h"

#include <gtest/gtest.h>

namespace stem_match::text {
namespace {

TEST(Utf8, RoundTripsScalarValues) {
  const std::u32string s = U"aé中\U0001F600";
  EXPECT_EQ(decode_utf8(encode_utf8(s)), s);
  EXPECT_EQ(length_utf8("\xc3\xa9t\xc3\xa9"), 3u);
}

TEST(Utf8, InvalidBytesBecomeReplacementCharacters) {
  EXPECT_EQ(decode_utf8("a\xff" "b"), U"a�b");
  EXPECT_EQ(decode_utf8("\xe4\xb8"), U"��");  // truncated sequence
  EXPECT_EQ(decode_utf8("\xc0\x80"), U"��");  // overlong NUL
}

TEST(FoldCase, AsciiAndLatin1) {
  EXPECT_EQ(fold_case("Computer SCIENCE"), "computer science");
  EXPECT_EQ(fold_case("\xc3\x89" "cole"), "\xc3\xa9" "cole");
  EXPECT_EQ(fold_case(U'×'), U'×');  // multiplication sign has no case
}

TEST(CollapseWhitespace, TrimsAndSqueezes) {
  EXPECT_EQ(collapse_whitespace("  New \t York\n City "), "New York City");
  EXPECT_EQ(collapse_whitespace("   "), "");
}

TEST(Hashtags, BodiesInOrder) {
  using V = std::vector<std::string>;
  EXPECT_EQ(extract_hashtags("love #Java and #java!"), (V{"Java", "java"}));
  EXPECT_EQ(extract_hashtags("#computersciencelife rules"), (V{"computersciencelife"}));
  EXPECT_EQ(extract_hashtags("no tags here"), V{});
  EXPECT_EQ(extract_hashtags("# alone, a#b, ##x"), V{});
  EXPECT_EQ(extract_hashtags("#caf\xc3\xa9, #3d_printing."), (V{"caf\xc3\xa9", "3d_printing"}));
  EXPECT_EQ(extract_hashtags("#go\xf0\x9f\x9a\x80"), (V{"go"}));
}

TEST(Emoji, BlockBoundaries) {
  EXPECT_TRUE(is_emoji(0x1F300));
  EXPECT_TRUE(is_emoji(0x1F64F));
  EXPECT_TRUE(is_emoji(0x1F9FF));
  EXPECT_FALSE(is_emoji(0x1F700));
  EXPECT_FALSE(is_emoji(U'a'));
}

TEST(AlnumTokens, SplitsOnPunctuation) {
  const auto t = alnum_tokens("HAHA, lol...LOL!");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], "HAHA");
  EXPECT_EQ(t[2], "LOL");
}

}  // namespace
}  // namespace stem_match::text
