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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "romanurdu/romanurdu.hpp"

namespace ru = romanurdu;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitAlignment = 3;

constexpr std::size_t kNgramOrder = 2;  // bigram model for the ngram backend

struct Options {
  std::string lexicon_path;
  std::string rules_path;
  std::string input_path;       // empty: standard input
  std::string gold_path;        // eval only
  std::string ngram_corpus_path;
  std::string backend = "context";
  std::string zero_score_policy = "frequency";
  std::string format = "text";
  bool no_punct_map = false;
  bool no_segmentation = false;
  bool trace = false;
};

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_input(const std::string& path) {
  if (path.empty()) return read_stream(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ru::ParseError("cannot open input file '" + path + "'");
  return read_stream(in);
}

ru::Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ru::ParseError("cannot open lexicon file '" + path + "'");
  return ru::load_lexicon(in, path);
}

ru::RuleTable load_rules_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ru::ParseError("cannot open rules file '" + path + "'");
  return ru::load_rules(in, path);
}

// One Urdu sentence per line, whitespace-separated words.
ru::NgramModel train_ngram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ru::ParseError("cannot open ngram corpus file '" + path + "'");
  std::vector<std::vector<std::string>> sentences;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::string> sentence;
    std::string word;
    while (words >> word) sentence.push_back(word);
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  }
  if (sentences.empty())
    throw ru::ParseError("ngram corpus file '" + path + "' contains no sentences");
  return ru::train_ngram(sentences, kNgramOrder);
}

struct Engine {
  ru::Lexicon lexicon;
  ru::RuleTable rules;
  ru::EngineConfig config;
  std::optional<ru::NgramModel> ngram_model;
};

Engine build_engine(const Options& options) {
  Engine engine{load_lexicon_file(options.lexicon_path), load_rules_file(options.rules_path),
                {}, std::nullopt};
  engine.config.map_punctuation = !options.no_punct_map;
  engine.config.segmentation_enabled = !options.no_segmentation;
  engine.config.zero_score_policy = options.zero_score_policy == "first"
                                        ? ru::ZeroScorePolicy::First
                                        : ru::ZeroScorePolicy::Frequency;
  if (options.backend == "ngram") {
    if (options.ngram_corpus_path.empty())
      throw ru::UsageError("--backend ngram requires --ngram-corpus");
    engine.config.backend = ru::Backend::Ngram;
    engine.ngram_model = train_ngram_file(options.ngram_corpus_path);
    engine.config.ngram_model = &*engine.ngram_model;
  } else if (!options.ngram_corpus_path.empty()) {
    throw ru::UsageError("--ngram-corpus is only meaningful with --backend ngram");
  }
  return engine;
}

void write_trace_text(std::ostream& out, const ru::TokenTrace& trace) {
  out << "trace: '" << trace.input << "' -> '" << trace.output
      << "' route=" << ru::to_string(trace.route);
  if (const auto* result = std::get_if<ru::DisambiguationResult>(&trace.detail)) {
    out << " method=" << ru::to_string(result->method) << " scores=[";
    for (std::size_t i = 0; i < result->scores.size(); ++i) {
      if (i > 0) out << ", ";
      out << result->scores[i].entry.urdu_form << ":" << result->scores[i].match_count;
    }
    out << "]";
  } else if (const auto* segments = std::get_if<std::vector<std::string>>(&trace.detail)) {
    out << " segments=[";
    for (std::size_t i = 0; i < segments->size(); ++i) {
      if (i > 0) out << ", ";
      out << (*segments)[i];
    }
    out << "]";
  } else if (const auto* fully_mapped = std::get_if<bool>(&trace.detail)) {
    out << " fully_mapped=" << (*fully_mapped ? "true" : "false");
  }
  out << "\n";
}

// One JSON object per Word token: input, output, route, scores, plus the
// route-specific detail.
void write_trace_json(std::ostream& out, const ru::TokenTrace& trace) {
  nlohmann::json object;
  object["input"] = trace.input;
  object["output"] = trace.output;
  object["route"] = std::string(ru::to_string(trace.route));
  object["scores"] = nlohmann::json::array();
  if (const auto* result = std::get_if<ru::DisambiguationResult>(&trace.detail)) {
    object["method"] = std::string(ru::to_string(result->method));
    for (const auto& score : result->scores)
      object["scores"].push_back({{"form", score.entry.urdu_form}, {"count", score.match_count}});
  } else if (const auto* segments = std::get_if<std::vector<std::string>>(&trace.detail)) {
    object["segments"] = *segments;
  } else if (const auto* fully_mapped = std::get_if<bool>(&trace.detail)) {
    object["fully_mapped"] = *fully_mapped;
  }
  out << object.dump() << "\n";
}

int run_transliterate(const Options& options) {
  const Engine engine = build_engine(options);
  const std::string input = read_input(options.input_path);
  const ru::TransliterationOutput output =
      ru::transliterate_text(engine.lexicon, engine.rules, engine.config, input);
  std::cout << output.text;
  if (options.trace) {
    for (const ru::TokenTrace& trace : output.traces) {
      if (options.format == "json-lines")
        write_trace_json(std::cerr, trace);
      else
        write_trace_text(std::cerr, trace);
    }
  }
  return kExitOk;
}

int run_eval(const Options& options) {
  const Engine engine = build_engine(options);
  std::ifstream gold_in(options.gold_path);
  if (!gold_in) throw ru::ParseError("cannot open gold corpus file '" + options.gold_path + "'");
  const std::vector<ru::EvalCase> gold = ru::load_gold_corpus(gold_in, options.gold_path);

  std::vector<ru::TransliterationOutput> outputs;
  outputs.reserve(gold.size());
  for (const ru::EvalCase& eval_case : gold)
    outputs.push_back(ru::transliterate_text(engine.lexicon, engine.rules, engine.config,
                                             eval_case.roman_input));
  const ru::EvalReport report = ru::evaluate(outputs, gold);

  std::cout << std::setw(6) << "case" << std::setw(8) << "words" << "  result\n";
  for (const ru::CaseResult& case_result : report.per_case) {
    std::cout << std::setw(6) << case_result.case_id << std::setw(8)
              << gold[case_result.case_id - 1].gold_urdu_words.size() << "  ";
    if (case_result.mismatched_positions.empty()) {
      std::cout << "ok";
    } else {
      std::cout << "wrong at";
      for (const std::size_t position : case_result.mismatched_positions)
        std::cout << " " << position;
    }
    std::cout << "\n";
  }
  std::cout << "total_words=" << report.total_words << " correct_words=" << report.correct_words
            << " ambiguous_total=" << report.ambiguous_total
            << " ambiguous_correct=" << report.ambiguous_correct << "\n";
  if (report.empty_corpus)
    std::cerr << "romanurdu: warning: empty corpus, accuracies are the 1.0 convention\n";
  std::cout << std::fixed << std::setprecision(6) << "accuracy=" << report.accuracy
            << " ambiguous_accuracy=" << report.ambiguous_accuracy << "\n";
  return kExitOk;
}

int run_lexicon_stats(const Options& options) {
  const ru::Lexicon lexicon = load_lexicon_file(options.lexicon_path);
  std::cout << "entries=" << lexicon.entry_count() << "\n"
            << "keys=" << lexicon.key_count() << "\n"
            << "ambiguous_keys=" << lexicon.ambiguous_key_count() << "\n"
            << "max_senses=" << lexicon.max_senses_per_key() << "\n";
  return kExitOk;
}

void add_engine_flags(CLI::App* cmd, Options& options) {
  cmd->add_option("--lexicon", options.lexicon_path, "Lexicon TSV file")->required();
  cmd->add_option("--rules", options.rules_path, "Grapheme rules TSV file")->required();
  cmd->add_option("--backend", options.backend, "Disambiguation backend")
      ->check(CLI::IsMember({"context", "ngram"}))
      ->capture_default_str();
  cmd->add_option("--ngram-corpus", options.ngram_corpus_path,
                  "Urdu training corpus for the ngram backend (one sentence per line)");
  cmd->add_option("--zero-score-policy", options.zero_score_policy,
                  "Fallback when no candidate has context evidence")
      ->check(CLI::IsMember({"frequency", "first"}))
      ->capture_default_str();
  cmd->add_flag("--no-punct-map", options.no_punct_map, "Keep Latin punctuation in the output");
  cmd->add_flag("--no-segmentation", options.no_segmentation,
                "Never split out-of-lexicon compounds");
}

}  // namespace

int main(int argc, char** argv) {
  Options options;
  CLI::App app{"Roman-Urdu to Urdu script transliteration"};
  app.require_subcommand(1);

  CLI::App* transliterate =
      app.add_subcommand("transliterate", "Convert Roman-Urdu text to Urdu script");
  add_engine_flags(transliterate, options);
  transliterate->add_option("--input", options.input_path,
                            "Input text file (default: standard input)");
  transliterate->add_flag("--trace", options.trace,
                          "Write one per-word decision record to standard error");
  transliterate->add_option("--format", options.format, "Trace format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "Score the engine against a gold corpus");
  add_engine_flags(eval, options);
  eval->add_option("--gold", options.gold_path, "Gold corpus file")->required();

  CLI::App* stats = app.add_subcommand("lexicon-stats", "Print lexicon diagnostics");
  stats->add_option("--lexicon", options.lexicon_path, "Lexicon TSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "romanurdu: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (transliterate->parsed()) return run_transliterate(options);
    if (eval->parsed()) return run_eval(options);
    return run_lexicon_stats(options);
  } catch (const ru::UsageError& e) {
    std::cerr << "romanurdu: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ru::AlignmentError& e) {
    std::cerr << "romanurdu: " << e.what() << "\n";
    return kExitAlignment;
  } catch (const ru::Error& e) {
    std::cerr << "romanurdu: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "romanurdu: " << e.what() << "\n";
    return kExitData;
  }
}
