#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "showprog/triples/catalog.hpp"
#include "showprog/triples/reward.hpp"

namespace showprog::triples {

// One training step: a fixed number of problems, each with a fixed number
// of alternative drafts, scored against per-problem ground truths.
struct StepProblem {
  std::string id;
  std::string ground_truth;          // draft text
  std::vector<std::string> drafts;   // raw draft texts
};

struct StepBatch {
  int step_index = 0;
  std::vector<StepProblem> problems;
};

struct StepPolicyConfig {
  int problems_per_step = 4;
  int drafts_per_problem = 8;
  JudgeConfig judge;
};

struct ScoredStep {
  int step_index = 0;
  std::vector<std::vector<RewardScore>> scores;  // [problem][draft]
  double pass_rate = 0.0;   // formal passes / total drafts
  double mean_grade = 0.0;  // zero-graded failures included
};

// Applies the formal gate to every draft; only passers reach the judge.
// Throws InvalidInputError on an incomplete batch.
ScoredStep score_step(const StepBatch& batch, const PropertyCatalog& catalog, JudgeService& judge,
                      const StepPolicyConfig& config);

// Byte-deterministic log line, one per step.
std::string step_log_line(const ScoredStep& step);

// Replay trace: one JSON object per line with step, problems[{id,
// ground_truth, drafts[]}].
std::vector<StepBatch> parse_trace_jsonl(const std::string& content);
std::vector<StepBatch> load_trace_jsonl(const std::filesystem::path& path);
std::string trace_line(const StepBatch& batch);

}  // namespace showprog::triples
