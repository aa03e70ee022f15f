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

#ifndef ROMANURDU_TESTS_TEST_UTIL_HPP
#define ROMANURDU_TESTS_TEST_UTIL_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "romanurdu/romanurdu.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open test asset: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(ROMANURDU_DATA_DIR) + "/" + name;
}

inline std::string test_data_path(const std::string& name) {
  return std::string(ROMANURDU_TEST_DATA_DIR) + "/" + name;
}

inline romanurdu::Lexicon fixture_lexicon() {
  std::ifstream in(data_path("lexicon.tsv"));
  return romanurdu::load_lexicon(in, "lexicon.tsv");
}

inline romanurdu::RuleTable fixture_rules() {
  std::ifstream in(data_path("rules.tsv"));
  return romanurdu::load_rules(in, "rules.tsv");
}

// Tokenizes `text` and returns its first sentence.
inline romanurdu::Sentence make_sentence(const std::string& text) {
  const auto sentences = romanurdu::split_sentences(romanurdu::tokenize(text));
  if (sentences.empty()) throw std::runtime_error("make_sentence: no sentence in: " + text);
  return sentences.front();
}

// Index of the nth Word token (0-based n) in the sentence's token list.
inline std::size_t word_position(const romanurdu::Sentence& sentence, std::size_t n = 0) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].kind != romanurdu::TokenKind::Word) continue;
    if (seen == n) return i;
    ++seen;
  }
  throw std::runtime_error("word_position: sentence has no Word token #" + std::to_string(n));
}

}  // namespace testutil

#endif  // ROMANURDU_TESTS_TEST_UTIL_HPP
