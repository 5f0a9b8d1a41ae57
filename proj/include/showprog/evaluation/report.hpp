#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "showprog/evaluation/ner.hpp"
#include "showprog/transcription/markdown.hpp"

namespace showprog::evaluation {

struct EvalPair {
  std::string key;  // "<doc_id>/<page_index>"
  transcription::TranscriptionDoc reference;
  transcription::TranscriptionDoc hypothesis;
  double word_count_weight = 0.0;  // reference word count
};

struct FileMatchResult {
  std::vector<EvalPair> pairs;
  std::vector<std::string> unmatched_reference;
  std::vector<std::string> unmatched_hypothesis;
};

// Pairs <doc_id>/<page_index>.md files across the two trees; items present
// on one side only are reported, never dropped.
FileMatchResult match_files(const std::filesystem::path& reference_dir,
                            const std::filesystem::path& hypothesis_dir);

struct EvalConfig {
  double line_match_threshold = 0.7;
  double ner_fuzzy_threshold = 0.85;
  bool optimal_line_assignment = false;
  std::optional<Gazetteer> gazetteer;
};

struct PairScores {
  std::string key;
  double weight = 0.0;
  double levenshtein_ratio = 0.0;
  double wer = 0.0;
  double cer = 0.0;
  double jaccard_words = 0.0;
  double jaccard_bigrams = 0.0;
  double line_precision = 0.0;
  double line_recall = 0.0;
  double line_levenshtein = 1.0;  // mean ratio over matched lines
  double ner_precision = 0.0;
  double ner_recall = 0.0;
  double ner_levenshtein = 1.0;  // mean ratio over matched entities
};

struct Aggregate {
  double weighted_mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
};

struct EvalReport {
  std::vector<PairScores> pairs;
  // aggregates keyed in a fixed order; see metric_names()
  std::vector<std::pair<std::string, Aggregate>> corpus;

  const Aggregate& aggregate(const std::string& metric) const;
  std::string to_jsonl() const;     // one record per pair + one corpus record
  std::string to_markdown() const;  // weighted-mean table + median/std table
};

EvalReport build_report(const std::vector<EvalPair>& pairs, const EvalConfig& config);

}  // namespace showprog::evaluation
