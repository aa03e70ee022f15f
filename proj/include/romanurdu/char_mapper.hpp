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

#ifndef ROMANURDU_CHAR_MAPPER_HPP
#define ROMANURDU_CHAR_MAPPER_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>

#include "romanurdu/errors.hpp"
#include "romanurdu/lexicon.hpp"

namespace romanurdu {

/// One grapheme rule: a 1-3 letter Roman pattern and its Urdu output.
struct MappingRule {
  std::string pattern;
  std::string output;
  std::size_t load_order = 0;
};

struct MappedWord {
  std::string text;
  bool fully_mapped = true;  // false when any byte was copied verbatim
};

/// Grapheme rule table for the out-of-lexicon fallback. Matching is greedy
/// longest-first, so lookup results never depend on rule file order.
class RuleTable {
 public:
  static constexpr std::size_t kMaxPatternLength = 3;

  /// Adds one rule. The pattern must be 1-3 lowercase Latin letters and the
  /// output non-empty; a repeated pattern raises DuplicateEntryError.
  void add(std::string_view pattern, std::string_view output) {
    if (pattern.empty() || pattern.size() > kMaxPatternLength)
      throw ParseError("rule pattern must be 1-" + std::to_string(kMaxPatternLength) +
                       " characters, got '" + std::string(pattern) + "'");
    for (const char c : pattern)
      if (c < 'a' || c > 'z')
        throw ParseError("rule pattern must be lowercase Latin letters, got '" +
                         std::string(pattern) + "'");
    if (output.empty())
      throw ParseError("rule for pattern '" + std::string(pattern) + "' has an empty output");
    MappingRule rule{std::string(pattern), std::string(output), rules_.size()};
    if (!rules_.emplace(rule.pattern, std::move(rule)).second)
      throw DuplicateEntryError("duplicate rule for pattern '" + std::string(pattern) + "'");
    max_pattern_len_ = std::max(max_pattern_len_, pattern.size());
  }

  const MappingRule* find(std::string_view pattern) const {
    const auto it = rules_.find(pattern);
    return it == rules_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return rules_.size(); }
  std::size_t max_pattern_len() const { return max_pattern_len_; }

  /// Converts a normalized word left to right, taking the longest matching
  /// pattern at each position. Bytes no pattern covers are copied verbatim
  /// and clear fully_mapped. Every input byte is consumed exactly once.
  MappedWord map_word(std::string_view word) const {
    MappedWord result;
    std::size_t pos = 0;
    while (pos < word.size()) {
      const MappingRule* rule = nullptr;
      std::size_t match_len = 0;
      const std::size_t limit = std::min(max_pattern_len_, word.size() - pos);
      for (std::size_t len = limit; len >= 1; --len) {
        if (const MappingRule* r = find(word.substr(pos, len))) {
          rule = r;
          match_len = len;
          break;
        }
      }
      if (rule != nullptr) {
        result.text += rule->output;
        pos += match_len;
      } else {
        result.text += word[pos];
        result.fully_mapped = false;
        ++pos;
      }
    }
    return result;
  }

  const std::map<std::string, MappingRule, std::less<>>& rules() const { return rules_; }

 private:
  std::map<std::string, MappingRule, std::less<>> rules_;
  std::size_t max_pattern_len_ = 0;
};

/// Loads rules from TSV: pattern<TAB>output. '#' lines and empty lines are
/// skipped; `source_name` is used in error messages only.
inline RuleTable load_rules(std::istream& in, std::string_view source_name = "rules") {
  RuleTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = detail::split_on(line, '\t');
    if (fields.size() != 2)
      throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                           ": expected 2 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    try {
      table.add(fields[0], fields[1]);
    } catch (const DuplicateEntryError& e) {
      throw DuplicateEntryError(std::string(source_name) + ":" + std::to_string(line_no) + ": " +
                                    e.what(),
                                line_no);
    } catch (const ParseError& e) {
      throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) + ": " + e.what(),
                       line_no);
    }
  }
  return table;
}

}  // namespace romanurdu

#endif  // ROMANURDU_CHAR_MAPPER_HPP
