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

#ifndef ROMANURDU_LEXICON_HPP
#define ROMANURDU_LEXICON_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "romanurdu/errors.hpp"

namespace romanurdu {

/// One Roman-key -> Urdu-form sense. `characteristics` holds the normalized
/// Roman context keywords that vote for this sense during disambiguation.
struct LexiconEntry {
  std::string roman_key;
  std::string urdu_form;
  std::uint64_t frequency = 0;
  std::set<std::string> characteristics;
  std::size_t load_order = 0;
};

/// Lowercases ASCII letters and strips surrounding non-letter bytes.
/// Idempotent; interior bytes other than A-Z are left untouched.
inline std::string normalize_key(std::string_view raw) {
  const auto is_letter = [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && !is_letter(static_cast<unsigned char>(raw[begin]))) ++begin;
  while (end > begin && !is_letter(static_cast<unsigned char>(raw[end - 1]))) --end;
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    const char c = raw[i];
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  }
  return out;
}

/// Immutable multimap from normalized Roman keys to frequency-ordered senses.
/// Safe for unsynchronized concurrent reads once loaded.
class Lexicon {
 public:
  /// All senses for an already-normalized key, sorted by frequency
  /// descending then load order ascending. Empty when the key is absent.
  std::span<const LexiconEntry> lookup(std::string_view key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return {};
    return it->second;
  }

  /// True iff the key has two or more senses.
  bool is_ambiguous(std::string_view key) const { return lookup(key).size() >= 2; }

  /// Splits an out-of-lexicon token into 2..max_segments lexicon keys.
  /// Prefers the fewest segments, then the leftmost-longest split. Returns
  /// nullopt when no such split exists.
  std::optional<std::vector<std::string>> segment_compound(std::string_view token,
                                                           std::size_t max_segments = 3) const {
    if (token.empty() || max_segments < 2) return std::nullopt;
    for (std::size_t count = 2; count <= max_segments; ++count) {
      std::vector<std::string> segments;
      if (split_exact(token, count, segments)) return segments;
    }
    return std::nullopt;
  }

  std::size_t entry_count() const { return entry_count_; }
  std::size_t key_count() const { return entries_.size(); }

  std::size_t ambiguous_key_count() const {
    std::size_t n = 0;
    for (const auto& [key, senses] : entries_)
      if (senses.size() >= 2) ++n;
    return n;
  }

  std::size_t max_senses_per_key() const {
    std::size_t n = 0;
    for (const auto& [key, senses] : entries_) n = std::max(n, senses.size());
    return n;
  }

  /// Inserts one sense. The key and characteristics are normalized here;
  /// a self-referencing characteristic is dropped. Throws on an empty key or
  /// form and on a duplicate (key, urdu_form) pair.
  void add(std::string_view roman, std::string_view urdu_form, std::uint64_t frequency,
           const std::vector<std::string>& characteristics = {}) {
    LexiconEntry entry;
    entry.roman_key = normalize_key(roman);
    entry.urdu_form = std::string(urdu_form);
    entry.frequency = frequency;
    entry.load_order = entry_count_;
    if (entry.roman_key.empty()) throw ParseError("lexicon entry has an empty roman key");
    if (entry.urdu_form.empty()) throw ParseError("lexicon entry has an empty Urdu form");
    for (const auto& raw : characteristics) {
      std::string cue = normalize_key(raw);
      if (!cue.empty() && cue != entry.roman_key) entry.characteristics.insert(std::move(cue));
    }
    auto& senses = entries_[entry.roman_key];
    for (const auto& existing : senses) {
      if (existing.urdu_form == entry.urdu_form)
        throw DuplicateEntryError("duplicate lexicon entry for key '" + entry.roman_key + "'");
    }
    max_key_length_ = std::max(max_key_length_, entry.roman_key.size());
    senses.push_back(std::move(entry));
    ++entry_count_;
    std::sort(senses.begin(), senses.end(), [](const LexiconEntry& a, const LexiconEntry& b) {
      if (a.frequency != b.frequency) return a.frequency > b.frequency;
      return a.load_order < b.load_order;
    });
  }

  const std::map<std::string, std::vector<LexiconEntry>, std::less<>>& entries() const {
    return entries_;
  }

 private:
  bool contains_key(std::string_view key) const { return entries_.find(key) != entries_.end(); }

  // Leftmost-longest split of `rest` into exactly `count` keys.
  bool split_exact(std::string_view rest, std::size_t count,
                   std::vector<std::string>& out) const {
    if (count == 1) {
      if (!contains_key(rest)) return false;
      out.emplace_back(rest);
      return true;
    }
    if (rest.size() < count) return false;  // every segment needs >= 1 byte
    const std::size_t longest = std::min(max_key_length_, rest.size() - (count - 1));
    for (std::size_t len = longest; len >= 1; --len) {
      if (!contains_key(rest.substr(0, len))) continue;
      out.emplace_back(rest.substr(0, len));
      if (split_exact(rest.substr(len), count - 1, out)) return true;
      out.pop_back();
    }
    return false;
  }

  std::map<std::string, std::vector<LexiconEntry>, std::less<>> entries_;
  std::size_t entry_count_ = 0;
  std::size_t max_key_length_ = 0;
};

namespace detail {

inline std::vector<std::string> split_on(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t pos = line.find(sep, begin);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(begin));
      return fields;
    }
    fields.emplace_back(line.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

inline std::uint64_t parse_frequency(std::string_view field, std::string_view source,
                                     std::size_t line_no) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty())
    throw ParseError(std::string(source) + ":" + std::to_string(line_no) +
                         ": frequency must be a non-negative integer, got '" +
                         std::string(field) + "'",
                     line_no);
  return value;
}

}  // namespace detail

/// Loads a lexicon from TSV: roman_key, urdu_form, frequency, and an optional
/// comma-separated characteristics column. Lines starting with '#' and empty
/// lines are skipped. `source_name` is used in error messages only.
inline Lexicon load_lexicon(std::istream& in, std::string_view source_name = "lexicon") {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = detail::split_on(line, '\t');
    if (fields.size() < 3 || fields.size() > 4)
      throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                           ": expected 3 or 4 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    const std::uint64_t frequency = detail::parse_frequency(fields[2], source_name, line_no);
    const std::vector<std::string> cues =
        fields.size() == 4 ? detail::split_on(fields[3], ',') : std::vector<std::string>{};
    try {
      lexicon.add(fields[0], fields[1], frequency, cues);
    } catch (const DuplicateEntryError& e) {
      throw DuplicateEntryError(std::string(source_name) + ":" + std::to_string(line_no) + ": " +
                                    e.what(),
                                line_no);
    } catch (const ParseError& e) {
      throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) + ": " + e.what(),
                       line_no);
    }
  }
  return lexicon;
}

}  // namespace romanurdu

#endif  // ROMANURDU_LEXICON_HPP
