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

#ifndef ROMANURDU_EVALUATION_HPP
#define ROMANURDU_EVALUATION_HPP

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "romanurdu/errors.hpp"
#include "romanurdu/pipeline.hpp"

namespace romanurdu {

/// One evaluation case: Roman input and its token-aligned gold Urdu words.
/// Segmented compounds contribute one gold word per segment.
struct EvalCase {
  std::string roman_input;
  std::vector<std::string> gold_urdu_words;
};

struct CaseResult {
  std::size_t case_id = 0;                      // 1-based
  std::vector<std::size_t> mismatched_positions;  // 1-based word positions
};

struct EvalReport {
  std::size_t total_words = 0;
  std::size_t correct_words = 0;
  double accuracy = 1.0;
  std::size_t ambiguous_total = 0;
  std::size_t ambiguous_correct = 0;
  double ambiguous_accuracy = 1.0;
  std::vector<CaseResult> per_case;
  bool empty_corpus = false;  // accuracies are the 1.0 convention, not measured
};

namespace detail {

struct OutputUnit {
  std::string_view word;
  bool ambiguous = false;  // produced by a LexiconDisambiguated trace
};

inline std::vector<OutputUnit> output_units(const TransliterationOutput& output) {
  std::vector<OutputUnit> units;
  for (const TokenTrace& trace : output.traces) {
    const bool ambiguous = trace.route == Route::LexiconDisambiguated;
    std::string_view rest = trace.output;
    while (!rest.empty()) {
      const std::size_t pos = rest.find(' ');
      const std::string_view word = rest.substr(0, pos);
      if (!word.empty()) units.push_back({word, ambiguous});
      if (pos == std::string_view::npos) break;
      rest.remove_prefix(pos + 1);
    }
  }
  return units;
}

}  // namespace detail

/// Scores system outputs against gold cases, word by word (byte-identical
/// match). Throws AlignmentError when case or per-case word counts disagree.
inline EvalReport evaluate(std::span<const TransliterationOutput> outputs,
                           std::span<const EvalCase> gold) {
  if (outputs.size() != gold.size())
    throw AlignmentError("evaluate: " + std::to_string(outputs.size()) + " outputs vs " +
                         std::to_string(gold.size()) + " gold cases");
  EvalReport report;
  for (std::size_t c = 0; c < gold.size(); ++c) {
    const auto units = detail::output_units(outputs[c]);
    if (units.size() != gold[c].gold_urdu_words.size())
      throw AlignmentError("evaluate: case " + std::to_string(c + 1) + ": system produced " +
                           std::to_string(units.size()) + " words, gold has " +
                           std::to_string(gold[c].gold_urdu_words.size()));
    CaseResult case_result;
    case_result.case_id = c + 1;
    for (std::size_t w = 0; w < units.size(); ++w) {
      const bool correct = units[w].word == gold[c].gold_urdu_words[w];
      ++report.total_words;
      if (correct)
        ++report.correct_words;
      else
        case_result.mismatched_positions.push_back(w + 1);
      if (units[w].ambiguous) {
        ++report.ambiguous_total;
        if (correct) ++report.ambiguous_correct;
      }
    }
    report.per_case.push_back(std::move(case_result));
  }
  if (report.total_words > 0)
    report.accuracy = static_cast<double>(report.correct_words) / report.total_words;
  else
    report.empty_corpus = true;
  if (report.ambiguous_total > 0)
    report.ambiguous_accuracy =
        static_cast<double>(report.ambiguous_correct) / report.ambiguous_total;
  return report;
}

/// Reads a gold corpus: per case, a Roman input line followed by a line of
/// tab-separated gold Urdu words; cases separated by blank lines.
inline std::vector<EvalCase> load_gold_corpus(std::istream& in,
                                              std::string_view source_name = "gold corpus") {
  std::vector<EvalCase> cases;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    EvalCase eval_case;
    eval_case.roman_input = line;
    const std::size_t roman_line = line_no;
    if (!std::getline(in, line))
      throw ParseError(std::string(source_name) + ":" + std::to_string(roman_line) +
                           ": case is missing its gold word line",
                       roman_line);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty())
      throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                           ": gold word line is empty",
                       line_no);
    eval_case.gold_urdu_words = detail::split_on(line, '\t');
    cases.push_back(std::move(eval_case));
  }
  return cases;
}

}  // namespace romanurdu

#endif  // ROMANURDU_EVALUATION_HPP
