// Copyright (c) 2026 The romanurdu Authors
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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "test_util.hpp"

namespace ru = romanurdu;

namespace {

struct Fixture : ::testing::Test {
  ru::Lexicon lex = testutil::fixture_lexicon();
  ru::RuleTable rules = testutil::fixture_rules();
  ru::EngineConfig config;
};

using Pipeline = Fixture;
using TransliterateWord = Fixture;

TEST_F(TransliterateWord, UniqueLexiconHit) {
  const auto sentence = testutil::make_sentence("kya hai");
  const auto trace = ru::transliterate_word(lex, rules, config, sentence, 0);
  EXPECT_EQ(trace.input, "kya");
  EXPECT_EQ(trace.output, "کیا");
  EXPECT_EQ(trace.route, ru::Route::LexiconUnique);
}

TEST_F(TransliterateWord, AmbiguousHitCarriesDisambiguationResult) {
  const auto sentence = testutil::make_sentence("bahar phool khilte hain");
  const auto trace = ru::transliterate_word(lex, rules, config, sentence, 0);
  EXPECT_EQ(trace.output, "بہار");
  EXPECT_EQ(trace.route, ru::Route::LexiconDisambiguated);
  const auto* result = std::get_if<ru::DisambiguationResult>(&trace.detail);
  ASSERT_NE(result, nullptr);
  EXPECT_EQ(result->method, ru::DisambiguationMethod::ContextMax);
  EXPECT_EQ(result->scores.size(), 2u);
}

TEST_F(TransliterateWord, CompoundSplitsIntoSpacedWords) {
  const auto sentence = testutil::make_sentence("apko salam");
  const auto trace = ru::transliterate_word(lex, rules, config, sentence, 0);
  EXPECT_EQ(trace.output, "آپ کو");
  EXPECT_EQ(trace.route, ru::Route::Segmented);
  const auto* segments = std::get_if<std::vector<std::string>>(&trace.detail);
  ASSERT_NE(segments, nullptr);
  EXPECT_EQ(*segments, (std::vector<std::string>{"ap", "ko"}));
}

TEST_F(TransliterateWord, AmbiguousSegmentUsesTheEnclosingSentence) {
  ru::Lexicon extended = testutil::fixture_lexicon();
  extended.add("se", "سے", 100);
  // "baharse" is out of lexicon and splits into bahar+se; the enclosing
  // sentence's "phool" cue steers the ambiguous first segment.
  const auto sentence = testutil::make_sentence("baharse phool khilte");
  const auto trace = ru::transliterate_word(extended, rules, config, sentence, 0);
  EXPECT_EQ(trace.route, ru::Route::Segmented);
  EXPECT_EQ(trace.output, "بہار سے");
}

TEST_F(TransliterateWord, OutOfLexiconFallsBackToCharMap) {
  const auto sentence = testutil::make_sentence("khan sahib");
  const auto trace = ru::transliterate_word(lex, rules, config, sentence, 0);
  EXPECT_EQ(trace.output, "خان");
  EXPECT_EQ(trace.route, ru::Route::CharMapped);
  const auto* fully_mapped = std::get_if<bool>(&trace.detail);
  ASSERT_NE(fully_mapped, nullptr);
  EXPECT_TRUE(*fully_mapped);
}

TEST_F(TransliterateWord, NormalizesBeforeLookup) {
  const auto sentence = testutil::make_sentence("KYA hai");
  const auto trace = ru::transliterate_word(lex, rules, config, sentence, 0);
  EXPECT_EQ(trace.output, "کیا");
  EXPECT_EQ(trace.route, ru::Route::LexiconUnique);
}

TEST_F(TransliterateWord, SegmentationCanBeDisabled) {
  config.segmentation_enabled = false;
  const auto sentence = testutil::make_sentence("apko salam");
  const auto trace = ru::transliterate_word(lex, rules, config, sentence, 0);
  EXPECT_EQ(trace.route, ru::Route::CharMapped);
  EXPECT_EQ(trace.output, "اپکو");  // a+p+k+o letterwise
}

TEST_F(TransliterateWord, UntouchedWordPassesThrough) {
  ru::RuleTable empty_rules;
  const auto sentence = testutil::make_sentence("zzz");
  const auto trace = ru::transliterate_word(lex, empty_rules, config, sentence, 0);
  EXPECT_EQ(trace.route, ru::Route::PassThrough);
  EXPECT_EQ(trace.output, "zzz");
}

TEST_F(TransliterateWord, RejectsNonWordPositions) {
  const auto sentence = testutil::make_sentence("kya hai");
  EXPECT_THROW(ru::transliterate_word(lex, rules, config, sentence, 1), ru::UsageError);
  EXPECT_THROW(ru::transliterate_word(lex, rules, config, sentence, 42), ru::UsageError);
}

TEST_F(TransliterateWord, RejectsBadConfig) {
  const auto sentence = testutil::make_sentence("kya");
  config.max_segments = 1;
  EXPECT_THROW(ru::transliterate_word(lex, rules, config, sentence, 0), ru::UsageError);
  config.max_segments = 3;
  config.backend = ru::Backend::Ngram;  // no model attached
  EXPECT_THROW(ru::transliterate_word(lex, rules, config, sentence, 0), ru::UsageError);
}

TEST_F(Pipeline, EmptyTextYieldsEmptyOutput) {
  const auto out = ru::transliterate_text(lex, rules, config, "");
  EXPECT_EQ(out.text, "");
  EXPECT_TRUE(out.traces.empty());
}

TEST_F(Pipeline, SimpleSentenceWithPunctuationMapping) {
  const auto out = ru::transliterate_text(lex, rules, config, "kya hai?");
  EXPECT_EQ(out.text, "کیا ہے؟");
  ASSERT_EQ(out.traces.size(), 2u);
  EXPECT_EQ(out.traces[0].input, "kya");
  EXPECT_EQ(out.traces[1].input, "hai");
}

TEST_F(Pipeline, SameKeyResolvedPerSentence) {
  ru::Lexicon extended = testutil::fixture_lexicon();
  extended.add("hain", "ہیں", 100);
  const auto out =
      ru::transliterate_text(extended, rules, config, "bahar jao. bahar phool hain.");
  EXPECT_EQ(out.text, "باہر جاؤ۔ بہار پھول ہیں۔");
}

TEST_F(Pipeline, PunctuationMappingCanBeDisabled) {
  config.map_punctuation = false;
  const auto out = ru::transliterate_text(lex, rules, config, "kya hai?");
  EXPECT_EQ(out.text, "کیا ہے?");
}

TEST_F(Pipeline, UnmappedPunctuationSurvives) {
  const auto out = ru::transliterate_text(lex, rules, config, "kya hai;");
  EXPECT_EQ(out.text, "کیا ہے;");
}

TEST_F(Pipeline, WhitespacePreservedVerbatim) {
  const auto out = ru::transliterate_text(lex, rules, config, "  kya \t hai ");
  EXPECT_EQ(out.text, "  کیا \t ہے ");
}

TEST_F(Pipeline, TraceCountEqualsWordTokenCount) {
  const std::string text = "kya hai? apko mil kr. zzz 12 bahar!";
  const auto out = ru::transliterate_text(lex, rules, config, text);
  std::size_t words = 0;
  for (const auto& token : ru::tokenize(text))
    if (token.kind == ru::TokenKind::Word) ++words;
  EXPECT_EQ(out.traces.size(), words);
}

TEST_F(Pipeline, Determinism) {
  const std::string text = "bahar mausam hai. apko kya? khan gaya.";
  const auto a = ru::transliterate_text(lex, rules, config, text);
  const auto b = ru::transliterate_text(lex, rules, config, text);
  EXPECT_EQ(a.text, b.text);
  ASSERT_EQ(a.traces.size(), b.traces.size());
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    EXPECT_EQ(a.traces[i].output, b.traces[i].output);
    EXPECT_EQ(a.traces[i].route, b.traces[i].route);
  }
}

TEST_F(Pipeline, SentenceLocality) {
  // Editing sentence 2 must not change sentence 1's resolution.
  const auto a = ru::transliterate_text(lex, rules, config, "bahar jao. kya hai?");
  const auto b = ru::transliterate_text(lex, rules, config, "bahar jao. mausam acha.");
  EXPECT_EQ(a.traces[0].output, "باہر");
  EXPECT_EQ(b.traces[0].output, "باہر");
  const auto c = ru::transliterate_text(lex, rules, config, "bahar phool. kya hai?");
  EXPECT_EQ(c.traces[0].output, "بہار");
}

TEST_F(Pipeline, DoubleOccurrenceResolvedPerPosition) {
  const auto out =
      ru::transliterate_text(lex, rules, config, "bahar jao aur bahar phool dekho");
  std::vector<std::string> bahar_outputs;
  for (const auto& trace : out.traces)
    if (trace.input == "bahar") bahar_outputs.push_back(trace.output);
  EXPECT_EQ(bahar_outputs, (std::vector<std::string>{"باہر", "بہار"}));
}

TEST_F(Pipeline, LexiconRoutesEmitOnlyUrduAndSpaces) {
  const auto out = ru::transliterate_text(
      lex, rules, config, "kya bahar hai? apko mil kr. jbk ghar jao. bahar phool!");
  for (const auto& trace : out.traces) {
    if (trace.route == ru::Route::CharMapped || trace.route == ru::Route::PassThrough) continue;
    for (unsigned char c : trace.output) {
      // Urdu letters encode as multi-byte UTF-8; only spaces may be ASCII.
      EXPECT_TRUE(c == ' ' || c >= 0x80) << trace.input << " -> " << trace.output;
    }
  }
}

TEST_F(Pipeline, ZeroScorePolicyFirstFlowsThrough) {
  config.zero_score_policy = ru::ZeroScorePolicy::First;
  const auto out = ru::transliterate_text(lex, rules, config, "bahar acha.");
  EXPECT_EQ(out.traces[0].output, "بہار");  // first-loaded sense
}

TEST_F(Pipeline, NgramBackendUsesLeftContext) {
  const auto model = ru::train_ngram({{"جاؤ", "باہر"}, {"جاؤ", "باہر"}}, 2);
  config.backend = ru::Backend::Ngram;
  config.ngram_model = &model;
  // "jao bahar": the already-emitted جاؤ makes باہر the likelier next word.
  const auto out = ru::transliterate_text(lex, rules, config, "jao bahar");
  ASSERT_EQ(out.traces.size(), 2u);
  EXPECT_EQ(out.traces[1].output, "باہر");
  const auto* result = std::get_if<ru::DisambiguationResult>(&out.traces[1].detail);
  ASSERT_NE(result, nullptr);
  EXPECT_EQ(result->method, ru::DisambiguationMethod::NgramMax);

  const auto spring = ru::train_ngram({{"جاؤ", "بہار"}, {"جاؤ", "بہار"}}, 2);
  config.ngram_model = &spring;
  EXPECT_EQ(ru::transliterate_text(lex, rules, config, "jao bahar").traces[1].output, "بہار");
}

TEST_F(Pipeline, NgramContextResetsPerSentence) {
  const auto model = ru::train_ngram({{"جاؤ", "باہر"}, {"<x>", "بہار"}}, 2);
  config.backend = ru::Backend::Ngram;
  config.ngram_model = &model;
  // Sentence 2 starts fresh: its context is the pad, not sentence 1's جاؤ.
  const auto out = ru::transliterate_text(lex, rules, config, "jao kya. bahar hai.");
  ASSERT_EQ(out.traces.size(), 4u);
  // P(باہر|<s>) == P(بہار|<s>), so frequency decides.
  EXPECT_EQ(out.traces[2].output, "باہر");
}

TEST_F(TransliterateWord, NgramBackendRebuildsContextFromPrecedingWords) {
  const auto model = ru::train_ngram({{"جاؤ", "بہار"}, {"جاؤ", "بہار"}}, 2);
  config.backend = ru::Backend::Ngram;
  config.ngram_model = &model;
  const auto sentence = testutil::make_sentence("jao bahar");
  const auto trace =
      ru::transliterate_word(lex, rules, config, sentence, testutil::word_position(sentence, 1));
  EXPECT_EQ(trace.output, "بہار");
}

TEST_F(Pipeline, GoldenCorpusReproduced) {
  const auto input = testutil::read_file(testutil::test_data_path("golden_input.txt"));
  const auto expected = testutil::read_file(testutil::test_data_path("golden_output.txt"));
  std::string got;
  std::size_t begin = 0;
  while (begin < input.size()) {
    std::size_t end = input.find('\n', begin);
    if (end == std::string::npos) end = input.size();
    got += ru::transliterate_text(lex, rules, config, input.substr(begin, end - begin)).text;
    got += '\n';
    begin = end + 1;
  }
  EXPECT_EQ(got, expected);
}

}  // namespace
