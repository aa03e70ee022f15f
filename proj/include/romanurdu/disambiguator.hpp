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

#ifndef ROMANURDU_DISAMBIGUATOR_HPP
#define ROMANURDU_DISAMBIGUATOR_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "romanurdu/errors.hpp"
#include "romanurdu/lexicon.hpp"
#include "romanurdu/tokenizer.hpp"

namespace romanurdu {

enum class DisambiguationMethod { Unique, ContextMax, FrequencyDefault, NgramMax };

inline std::string_view to_string(DisambiguationMethod method) {
  switch (method) {
    case DisambiguationMethod::Unique: return "Unique";
    case DisambiguationMethod::ContextMax: return "ContextMax";
    case DisambiguationMethod::FrequencyDefault: return "FrequencyDefault";
    case DisambiguationMethod::NgramMax: return "NgramMax";
  }
  return "?";
}

// What to do when no candidate has any context evidence: fall back to the
// highest-frequency sense, or to the first-loaded sense.
enum class ZeroScorePolicy { Frequency, First };

struct CandidateScore {
  LexiconEntry entry;
  int match_count = 0;
};

struct DisambiguationResult {
  LexiconEntry chosen;
  std::vector<CandidateScore> scores;  // one per candidate, in candidate order
  DisambiguationMethod method = DisambiguationMethod::Unique;
};

/// Number of distinct normalized words of the sentence, the target position
/// excluded, that appear in the candidate's characteristics. Repeated cue
/// words count once.
inline int context_score(const LexiconEntry& candidate, const Sentence& sentence,
                         std::size_t target_position) {
  if (target_position >= sentence.tokens.size() ||
      sentence.tokens[target_position].kind != TokenKind::Word)
    throw UsageError("context_score: target_position " + std::to_string(target_position) +
                     " does not index a Word token");
  std::set<std::string> seen;
  int score = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i == target_position || sentence.tokens[i].kind != TokenKind::Word) continue;
    std::string word = normalize_key(sentence.tokens[i].text);
    if (word.empty() || !seen.insert(word).second) continue;
    if (candidate.characteristics.count(word)) ++score;
  }
  return score;
}

namespace detail {

constexpr std::size_t kNoCue = std::numeric_limits<std::size_t>::max();

// Word-ordinal distance from the target to the candidate's nearest cue
// occurrence in the sentence; kNoCue when no cue is present.
inline std::size_t nearest_cue_distance(const LexiconEntry& candidate, const Sentence& sentence,
                                        std::size_t target_position) {
  std::size_t distance = kNoCue;
  std::size_t ordinal = 0;
  std::size_t target_ordinal = 0;
  std::vector<std::pair<std::size_t, std::string>> words;  // (ordinal, normalized)
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].kind != TokenKind::Word) continue;
    if (i == target_position)
      target_ordinal = ordinal;
    else
      words.emplace_back(ordinal, normalize_key(sentence.tokens[i].text));
    ++ordinal;
  }
  for (const auto& [word_ordinal, word] : words) {
    if (!candidate.characteristics.count(word)) continue;
    const std::size_t d =
        word_ordinal > target_ordinal ? word_ordinal - target_ordinal : target_ordinal - word_ordinal;
    distance = std::min(distance, d);
  }
  return distance;
}

}  // namespace detail

/// Picks one sense for an ambiguous word. A single candidate is returned as
/// Unique. Otherwise candidates are scored against the sentence; when any
/// score is positive the winner is the maximal (score, cue proximity,
/// frequency, load order) candidate (ContextMax). When every score is zero
/// the policy default applies (FrequencyDefault).
inline DisambiguationResult choose(std::span<const LexiconEntry> candidates,
                                   const Sentence& sentence, std::size_t target_position,
                                   ZeroScorePolicy policy = ZeroScorePolicy::Frequency) {
  if (candidates.empty()) throw UsageError("choose: empty candidate list");
  if (candidates.size() == 1)
    return DisambiguationResult{candidates[0], {}, DisambiguationMethod::Unique};

  DisambiguationResult result;
  int max_score = 0;
  for (const LexiconEntry& candidate : candidates) {
    const int score = context_score(candidate, sentence, target_position);
    result.scores.push_back({candidate, score});
    max_score = std::max(max_score, score);
  }

  const LexiconEntry* best = nullptr;
  if (max_score > 0) {
    result.method = DisambiguationMethod::ContextMax;
    std::size_t best_distance = detail::kNoCue;
    for (const CandidateScore& cs : result.scores) {
      if (cs.match_count != max_score) continue;
      const std::size_t distance =
          detail::nearest_cue_distance(cs.entry, sentence, target_position);
      const bool wins =
          best == nullptr || distance < best_distance ||
          (distance == best_distance &&
           (cs.entry.frequency > best->frequency ||
            (cs.entry.frequency == best->frequency && cs.entry.load_order < best->load_order)));
      if (wins) {
        best = &cs.entry;
        best_distance = distance;
      }
    }
  } else {
    result.method = DisambiguationMethod::FrequencyDefault;
    for (const CandidateScore& cs : result.scores) {
      const bool wins =
          best == nullptr ||
          (policy == ZeroScorePolicy::Frequency
               ? (cs.entry.frequency > best->frequency ||
                  (cs.entry.frequency == best->frequency && cs.entry.load_order < best->load_order))
               : cs.entry.load_order < best->load_order);
      if (wins) best = &cs.entry;
    }
  }
  result.chosen = *best;
  return result;
}

/// Add-one smoothed n-gram model over Urdu words. Sentence starts are padded
/// with kPadSymbol; the pad never enters the vocabulary.
class NgramModel {
 public:
  static constexpr std::string_view kPadSymbol = "<s>";

  std::size_t order() const { return order_; }
  const std::set<std::string>& vocabulary() const { return vocabulary_; }

  std::uint64_t pair_count(std::span<const std::string> context, std::string_view word) const {
    const auto it = counts_.find(normalized_context(context));
    if (it == counts_.end()) return 0;
    const auto jt = it->second.find(std::string(word));
    return jt == it->second.end() ? 0 : jt->second;
  }

  std::uint64_t context_count(std::span<const std::string> context) const {
    const auto it = totals_.find(normalized_context(context));
    return it == totals_.end() ? 0 : it->second;
  }

  /// Laplace-smoothed P(word | context): (count + 1) / (total + |V|). The
  /// context is right-aligned to order-1 words, padded when shorter.
  double probability(std::span<const std::string> context, std::string_view word) const {
    const double numerator = static_cast<double>(pair_count(context, word)) + 1.0;
    const double denominator =
        static_cast<double>(context_count(context)) + static_cast<double>(vocabulary_.size());
    return numerator / denominator;
  }

  void observe(const std::vector<std::string>& sentence) {
    std::vector<std::string> padded(order_ - 1, std::string(kPadSymbol));
    padded.insert(padded.end(), sentence.begin(), sentence.end());
    for (std::size_t i = order_ - 1; i < padded.size(); ++i) {
      std::vector<std::string> context(padded.begin() + (i - (order_ - 1)), padded.begin() + i);
      ++counts_[context][padded[i]];
      ++totals_[std::move(context)];
      vocabulary_.insert(padded[i]);
    }
  }

  explicit NgramModel(std::size_t order) : order_(order) {
    if (order < 1) throw UsageError("NgramModel: order must be >= 1");
  }

 private:
  std::vector<std::string> normalized_context(std::span<const std::string> context) const {
    std::vector<std::string> out;
    const std::size_t want = order_ - 1;
    if (context.size() >= want) {
      out.assign(context.end() - want, context.end());
    } else {
      out.assign(want - context.size(), std::string(kPadSymbol));
      out.insert(out.end(), context.begin(), context.end());
    }
    return out;
  }

  std::size_t order_;
  std::map<std::vector<std::string>, std::map<std::string, std::uint64_t>> counts_;
  std::map<std::vector<std::string>, std::uint64_t> totals_;
  std::set<std::string> vocabulary_;
};

/// Counts every n-gram of the corpus with (n-1)-padding at sentence starts.
/// Throws UsageError for n < 1 or a corpus with no words.
inline NgramModel train_ngram(const std::vector<std::vector<std::string>>& sentences,
                              std::size_t n) {
  if (n < 1) throw UsageError("train_ngram: order must be >= 1");
  if (sentences.empty()) throw UsageError("train_ngram: empty training corpus");
  NgramModel model(n);
  for (const auto& sentence : sentences) model.observe(sentence);
  if (model.vocabulary().empty()) throw UsageError("train_ngram: training corpus has no words");
  return model;
}

/// Picks the candidate whose Urdu form the model rates most probable after
/// `left_context`. Ties go to the higher frequency, then lower load order.
inline DisambiguationResult choose_ngram(const NgramModel& model,
                                         std::span<const LexiconEntry> candidates,
                                         std::span<const std::string> left_context) {
  if (candidates.empty()) throw UsageError("choose_ngram: empty candidate list");
  DisambiguationResult result;
  result.method = DisambiguationMethod::NgramMax;
  const LexiconEntry* best = nullptr;
  double best_probability = -1.0;
  for (const LexiconEntry& candidate : candidates) {
    const double p = model.probability(left_context, candidate.urdu_form);
    result.scores.push_back(
        {candidate, static_cast<int>(model.pair_count(left_context, candidate.urdu_form))});
    const bool wins =
        best == nullptr || p > best_probability ||
        (p == best_probability &&
         (candidate.frequency > best->frequency ||
          (candidate.frequency == best->frequency && candidate.load_order < best->load_order)));
    if (wins) {
      best = &candidate;
      best_probability = p;
    }
  }
  result.chosen = *best;
  return result;
}

}  // namespace romanurdu

#endif  // ROMANURDU_DISAMBIGUATOR_HPP
