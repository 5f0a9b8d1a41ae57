#pragma once

#include <string>
#include <vector>

#include "showprog/transcription/markdown.hpp"

namespace showprog::evaluation {

struct LineMatch {
  int ref_index = -1;
  int hyp_index = -1;
  double ratio = 0.0;  // levenshtein_ratio of the matched pair
  double wer = 0.0;
  double cer = 0.0;
};

struct AlignResult {
  std::vector<LineMatch> matches;
  double precision = 0.0;  // matched / hypothesis lines
  double recall = 0.0;     // matched / reference lines
};

// Matches hypothesis lines to reference lines (each used at most once) by
// levenshtein_ratio >= threshold. Greedy best-first by default; `optimal`
// switches to maximum-cardinality matching, the oracle for small docs.
AlignResult align_lines(const transcription::TranscriptionDoc& reference,
                        const transcription::TranscriptionDoc& hypothesis, double threshold,
                        bool optimal = false);

std::vector<std::string> doc_lines(const transcription::TranscriptionDoc& doc);

}  // namespace showprog::evaluation
