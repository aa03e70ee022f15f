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

#ifndef ROMANURDU_TOKENIZER_HPP
#define ROMANURDU_TOKENIZER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "romanurdu/errors.hpp"

namespace romanurdu {

enum class TokenKind { Word, Punct, Whitespace, Terminator };

inline std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Punct: return "Punct";
    case TokenKind::Whitespace: return "Whitespace";
    case TokenKind::Terminator: return "Terminator";
  }
  return "?";
}

// A classified span of the input. Token texts concatenate back to the input
// byte for byte; [start, end) are byte offsets.
struct Token {
  std::string text;
  TokenKind kind = TokenKind::Punct;
  std::size_t start = 0;
  std::size_t end = 0;
};

// A run of tokens ending at a sentence terminator (terminator included,
// trailing whitespace absorbed). `index` is the position in the document.
struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;
};

using TerminatorSet = std::unordered_set<std::string>;

// Latin and Urdu sentence terminators.
inline const TerminatorSet& default_terminators() {
  static const TerminatorSet set = {".", "!", "?", "۔", "؟"};
  return set;
}

namespace detail {

inline bool is_ascii_letter(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Decodes one codepoint starting at `pos`, returning its byte length.
// Rejects truncated, overlong, surrogate and out-of-range sequences.
inline std::size_t decode_utf8(std::string_view text, std::size_t pos, char32_t& out) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    out = lead;
    return 1;
  }
  std::size_t len;
  char32_t cp;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    throw EncodingError("invalid UTF-8 lead byte at offset " + std::to_string(pos));
  }
  if (pos + len > text.size())
    throw EncodingError("truncated UTF-8 sequence at offset " + std::to_string(pos));
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80)
      throw EncodingError("invalid UTF-8 continuation byte at offset " + std::to_string(pos + i));
    cp = (cp << 6) | (c & 0x3F);
  }
  static constexpr char32_t kMinForLen[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinForLen[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
    throw EncodingError("invalid UTF-8 codepoint at offset " + std::to_string(pos));
  out = cp;
  return len;
}

}  // namespace detail

// Splits text into maximal letter runs (Word), maximal whitespace runs
// (Whitespace) and single-codepoint Punct/Terminator tokens. Throws
// EncodingError on invalid UTF-8.
inline std::vector<Token> tokenize(std::string_view text,
                                   const TerminatorSet& terminators = default_terminators()) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    Token token;
    token.start = pos;
    if (detail::is_ascii_letter(c)) {
      std::size_t end = pos + 1;
      while (end < text.size() && detail::is_ascii_letter(static_cast<unsigned char>(text[end])))
        ++end;
      token.kind = TokenKind::Word;
      token.end = end;
    } else if (detail::is_ascii_space(c)) {
      std::size_t end = pos + 1;
      while (end < text.size() && detail::is_ascii_space(static_cast<unsigned char>(text[end])))
        ++end;
      token.kind = TokenKind::Whitespace;
      token.end = end;
    } else {
      char32_t cp = 0;
      const std::size_t len = detail::decode_utf8(text, pos, cp);
      token.end = pos + len;
      const std::string utf8(text.substr(pos, len));
      token.kind = terminators.count(utf8) ? TokenKind::Terminator : TokenKind::Punct;
    }
    token.text.assign(text.substr(token.start, token.end - token.start));
    pos = token.end;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

// Groups tokens into sentences. A Terminator closes the current sentence;
// whitespace right after it stays with the closed sentence, the next
// non-whitespace token opens a new one. Input that is pure whitespace yields
// no sentences.
inline std::vector<Sentence> split_sentences(const std::vector<Token>& tokens) {
  std::vector<Sentence> sentences;
  Sentence current;
  bool terminated = false;
  bool has_content = false;  // current holds a non-whitespace token

  const auto flush = [&] {
    if (has_content) {
      current.index = sentences.size();
      sentences.push_back(std::move(current));
    }
    current = Sentence{};
    terminated = false;
    has_content = false;
  };

  for (const Token& token : tokens) {
    if (terminated && token.kind != TokenKind::Whitespace) flush();
    current.tokens.push_back(token);
    if (token.kind != TokenKind::Whitespace) has_content = true;
    if (token.kind == TokenKind::Terminator) terminated = true;
  }
  flush();
  return sentences;
}

// Concatenates token texts, substituting `replacements` (token index ->
// replacement text). Throws UsageError on an out-of-range index.
inline std::string reconstruct(const std::vector<Token>& tokens,
                               const std::map<std::size_t, std::string>& replacements) {
  for (const auto& [index, unused] : replacements) {
    if (index >= tokens.size())
      throw UsageError("reconstruct: replacement index " + std::to_string(index) +
                       " out of range (have " + std::to_string(tokens.size()) + " tokens)");
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto it = replacements.find(i);
    out += (it != replacements.end()) ? it->second : tokens[i].text;
  }
  return out;
}

}  // namespace romanurdu

#endif  // ROMANURDU_TOKENIZER_HPP
