#include "showprog/evaluation/align.hpp"

#include <algorithm>

#include "showprog/evaluation/metrics.hpp"
#include "showprog/support/errors.hpp"
#include "showprog/support/text.hpp"

namespace showprog::evaluation {

std::vector<std::string> doc_lines(const transcription::TranscriptionDoc& doc) {
  std::vector<std::string> lines;
  for (const std::string& line : text::split_lines(transcription::render_markdown(doc))) {
    if (!text::trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

namespace {

struct Candidate {
  double ratio;
  int ref;
  int hyp;
};

// Kuhn's augmenting paths over the thresholded bipartite graph.
bool augment(int ref, const std::vector<std::vector<int>>& adj, std::vector<char>& visited,
             std::vector<int>& hyp_match) {
  for (int hyp : adj[static_cast<std::size_t>(ref)]) {
    if (visited[static_cast<std::size_t>(hyp)]) continue;
    visited[static_cast<std::size_t>(hyp)] = 1;
    if (hyp_match[static_cast<std::size_t>(hyp)] < 0 ||
        augment(hyp_match[static_cast<std::size_t>(hyp)], adj, visited, hyp_match)) {
      hyp_match[static_cast<std::size_t>(hyp)] = ref;
      return true;
    }
  }
  return false;
}

}  // namespace

AlignResult align_lines(const transcription::TranscriptionDoc& reference,
                        const transcription::TranscriptionDoc& hypothesis, double threshold,
                        bool optimal) {
  if (threshold <= 0.0 || threshold > 1.0) throw InvalidInputError("threshold must be in (0, 1]");
  const std::vector<std::string> ref_lines = doc_lines(reference);
  const std::vector<std::string> hyp_lines = doc_lines(hypothesis);

  AlignResult result;
  if (ref_lines.empty() && hyp_lines.empty()) {
    result.precision = 1.0;
    result.recall = 1.0;
    return result;
  }

  std::vector<Candidate> candidates;
  for (int r = 0; r < static_cast<int>(ref_lines.size()); ++r) {
    for (int h = 0; h < static_cast<int>(hyp_lines.size()); ++h) {
      double ratio = levenshtein_ratio(ref_lines[static_cast<std::size_t>(r)],
                                       hyp_lines[static_cast<std::size_t>(h)]);
      if (ratio >= threshold) candidates.push_back({ratio, r, h});
    }
  }

  std::vector<std::pair<int, int>> chosen;
  if (optimal) {
    std::vector<std::vector<int>> adj(ref_lines.size());
    for (const Candidate& c : candidates) adj[static_cast<std::size_t>(c.ref)].push_back(c.hyp);
    std::vector<int> hyp_match(hyp_lines.size(), -1);
    for (int r = 0; r < static_cast<int>(ref_lines.size()); ++r) {
      std::vector<char> visited(hyp_lines.size(), 0);
      augment(r, adj, visited, hyp_match);
    }
    for (int h = 0; h < static_cast<int>(hyp_lines.size()); ++h) {
      if (hyp_match[static_cast<std::size_t>(h)] >= 0) {
        chosen.emplace_back(hyp_match[static_cast<std::size_t>(h)], h);
      }
    }
    std::sort(chosen.begin(), chosen.end());
  } else {
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.ratio != b.ratio) return a.ratio > b.ratio;
      if (a.ref != b.ref) return a.ref < b.ref;
      return a.hyp < b.hyp;
    });
    std::vector<char> ref_used(ref_lines.size(), 0), hyp_used(hyp_lines.size(), 0);
    for (const Candidate& c : candidates) {
      if (ref_used[static_cast<std::size_t>(c.ref)] || hyp_used[static_cast<std::size_t>(c.hyp)]) continue;
      ref_used[static_cast<std::size_t>(c.ref)] = 1;
      hyp_used[static_cast<std::size_t>(c.hyp)] = 1;
      chosen.emplace_back(c.ref, c.hyp);
    }
    std::sort(chosen.begin(), chosen.end());
  }

  for (const auto& [r, h] : chosen) {
    LineMatch m;
    m.ref_index = r;
    m.hyp_index = h;
    const std::string& ref_line = ref_lines[static_cast<std::size_t>(r)];
    const std::string& hyp_line = hyp_lines[static_cast<std::size_t>(h)];
    m.ratio = levenshtein_ratio(ref_line, hyp_line);
    m.wer = wer(ref_line, hyp_line);
    m.cer = cer(ref_line, hyp_line);
    result.matches.push_back(m);
  }
  result.precision =
      hyp_lines.empty() ? 1.0 : static_cast<double>(result.matches.size()) / hyp_lines.size();
  result.recall =
      ref_lines.empty() ? 1.0 : static_cast<double>(result.matches.size()) / ref_lines.size();
  return result;
}

}  // namespace showprog::evaluation
