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

#ifndef ROMANURDU_PIPELINE_HPP
#define ROMANURDU_PIPELINE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "romanurdu/char_mapper.hpp"
#include "romanurdu/disambiguator.hpp"
#include "romanurdu/errors.hpp"
#include "romanurdu/lexicon.hpp"
#include "romanurdu/tokenizer.hpp"

namespace romanurdu {

enum class Backend { Context, Ngram };

inline const std::map<std::string, std::string>& default_punctuation_map() {
  static const std::map<std::string, std::string> table = {
      {".", "۔"},  // Urdu full stop
      {"?", "؟"},  // Arabic question mark
      {",", "،"},  // Arabic comma
  };
  return table;
}

// Policy switches for the engine. The n-gram model is only consulted when
// backend == Ngram and must outlive the calls that use the config.
struct EngineConfig {
  ZeroScorePolicy zero_score_policy = ZeroScorePolicy::Frequency;
  Backend backend = Backend::Context;
  bool map_punctuation = true;
  bool segmentation_enabled = true;
  std::size_t max_segments = 3;
  TerminatorSet terminators = default_terminators();
  std::map<std::string, std::string> punctuation_map = default_punctuation_map();
  const NgramModel* ngram_model = nullptr;
};

enum class Route { LexiconUnique, LexiconDisambiguated, Segmented, CharMapped, PassThrough };

inline std::string_view to_string(Route route) {
  switch (route) {
    case Route::LexiconUnique: return "LexiconUnique";
    case Route::LexiconDisambiguated: return "LexiconDisambiguated";
    case Route::Segmented: return "Segmented";
    case Route::CharMapped: return "CharMapped";
    case Route::PassThrough: return "PassThrough";
  }
  return "?";
}

/// How one Word token was converted. `detail` carries the disambiguation
/// result (LexiconDisambiguated), the Roman segment list (Segmented), or the
/// fully_mapped flag (CharMapped / PassThrough).
struct TokenTrace {
  std::string input;
  std::string output;
  Route route = Route::PassThrough;
  std::variant<std::monostate, DisambiguationResult, std::vector<std::string>, bool> detail;
};

struct TransliterationOutput {
  std::string text;
  std::vector<TokenTrace> traces;  // one per Word token, in input order
};

namespace detail {

inline void validate_config(const EngineConfig& config) {
  if (config.max_segments < 2)
    throw UsageError("EngineConfig: max_segments must be >= 2, got " +
                     std::to_string(config.max_segments));
  if (config.backend == Backend::Ngram && config.ngram_model == nullptr)
    throw UsageError("EngineConfig: ngram backend selected but no model supplied");
}

// Resolves one lexicon key that is known to have >= 1 sense.
inline DisambiguationResult resolve(const Lexicon& lexicon, const EngineConfig& config,
                                    std::string_view key, const Sentence& sentence,
                                    std::size_t position,
                                    const std::vector<std::string>& left_context) {
  const auto senses = lexicon.lookup(key);
  if (config.backend == Backend::Ngram && senses.size() >= 2)
    return choose_ngram(*config.ngram_model, senses, left_context);
  return choose(senses, sentence, position, config.zero_score_policy);
}

// Appends the space-separated words of `output` to the n-gram left context.
inline void push_context(std::vector<std::string>& left_context, std::string_view output) {
  std::size_t begin = 0;
  while (begin <= output.size()) {
    const std::size_t pos = output.find(' ', begin);
    const std::string_view word =
        output.substr(begin, pos == std::string_view::npos ? output.size() - begin : pos - begin);
    if (!word.empty()) left_context.emplace_back(word);
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
}

inline TokenTrace transliterate_one(const Lexicon& lexicon, const RuleTable& rules,
                                    const EngineConfig& config, const Sentence& sentence,
                                    std::size_t position,
                                    const std::vector<std::string>& left_context) {
  const Token& token = sentence.tokens[position];
  if (token.kind != TokenKind::Word)
    throw UsageError("transliterate_word: position " + std::to_string(position) +
                     " does not index a Word token");
  TokenTrace trace;
  trace.input = token.text;
  const std::string key = normalize_key(token.text);

  const auto senses = lexicon.lookup(key);
  if (senses.size() == 1) {
    trace.route = Route::LexiconUnique;
    trace.output = senses[0].urdu_form;
    return trace;
  }
  if (senses.size() >= 2) {
    DisambiguationResult result = resolve(lexicon, config, key, sentence, position, left_context);
    trace.route = Route::LexiconDisambiguated;
    trace.output = result.chosen.urdu_form;
    trace.detail = std::move(result);
    return trace;
  }

  if (config.segmentation_enabled) {
    if (auto segments = lexicon.segment_compound(key, config.max_segments)) {
      std::vector<std::string> segment_context = left_context;
      std::string joined;
      for (const std::string& segment : *segments) {
        const DisambiguationResult result =
            resolve(lexicon, config, segment, sentence, position, segment_context);
        if (!joined.empty()) joined += ' ';
        joined += result.chosen.urdu_form;
        push_context(segment_context, result.chosen.urdu_form);
      }
      trace.route = Route::Segmented;
      trace.output = std::move(joined);
      trace.detail = std::move(*segments);
      return trace;
    }
  }

  MappedWord mapped = rules.map_word(key);
  // A word no rule touched at all passes through unchanged.
  trace.route = (!mapped.fully_mapped && mapped.text == key) ? Route::PassThrough
                                                             : Route::CharMapped;
  trace.output = std::move(mapped.text);
  trace.detail = mapped.fully_mapped;
  return trace;
}

}  // namespace detail

/// Converts the Word token at `position` of `sentence`: lexicon hit (unique
/// or disambiguated), compound segmentation, then grapheme-rule fallback.
inline TokenTrace transliterate_word(const Lexicon& lexicon, const RuleTable& rules,
                                     const EngineConfig& config, const Sentence& sentence,
                                     std::size_t position) {
  detail::validate_config(config);
  if (position >= sentence.tokens.size())
    throw UsageError("transliterate_word: position " + std::to_string(position) +
                     " out of range");
  std::vector<std::string> left_context;
  if (config.backend == Backend::Ngram) {
    // Rebuild the already-chosen words to the left of `position`.
    for (std::size_t i = 0; i < position; ++i) {
      if (sentence.tokens[i].kind != TokenKind::Word) continue;
      const TokenTrace trace =
          detail::transliterate_one(lexicon, rules, config, sentence, i, left_context);
      detail::push_context(left_context, trace.output);
    }
  }
  return detail::transliterate_one(lexicon, rules, config, sentence, position, left_context);
}

/// Runs the whole pipeline over a document: tokenize, split into sentences,
/// transliterate every Word token, map punctuation per config, and rebuild
/// the text with all whitespace preserved verbatim.
inline TransliterationOutput transliterate_text(const Lexicon& lexicon, const RuleTable& rules,
                                                const EngineConfig& config,
                                                std::string_view text) {
  detail::validate_config(config);
  const std::vector<Token> tokens = tokenize(text, config.terminators);
  const std::vector<Sentence> sentences = split_sentences(tokens);

  TransliterationOutput output;
  std::map<std::size_t, std::string> replacements;
  std::size_t global_index = 0;
  for (const Sentence& sentence : sentences) {
    std::vector<std::string> left_context;  // n-gram context, per sentence
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i, ++global_index) {
      const Token& token = sentence.tokens[i];
      switch (token.kind) {
        case TokenKind::Word: {
          TokenTrace trace =
              detail::transliterate_one(lexicon, rules, config, sentence, i, left_context);
          detail::push_context(left_context, trace.output);
          replacements[global_index] = trace.output;
          output.traces.push_back(std::move(trace));
          break;
        }
        case TokenKind::Punct:
        case TokenKind::Terminator: {
          if (!config.map_punctuation) break;
          const auto it = config.punctuation_map.find(token.text);
          if (it != config.punctuation_map.end()) replacements[global_index] = it->second;
          break;
        }
        case TokenKind::Whitespace:
          break;
      }
    }
  }
  output.text = reconstruct(tokens, replacements);
  return output;
}

}  // namespace romanurdu

#endif  // ROMANURDU_PIPELINE_HPP
