#pragma once

#include <optional>
#include <string>
#include <vector>

#include "showprog/triples/catalog.hpp"
#include "showprog/triples/draft.hpp"

namespace showprog::triples {

// Two-part reinforcement policy: a hard formal gate (catalog membership,
// each property used at most once) and a judge-assigned 0-10 grade for the
// drafts that pass. A formal failure always means total reward zero.
struct RewardScore {
  bool formal_pass = false;
  std::optional<int> grade;
  std::vector<std::string> violations;

  double total(int /*grade_max*/ = 10) const { return formal_pass && grade ? *grade : 0.0; }
};

RewardScore formal_reward(const Draft& draft, const PropertyCatalog& catalog);

// Judge wire contract: request is a rendered prompt, response is an integer
// grade as text.
class JudgeService {
 public:
  virtual ~JudgeService() = default;
  virtual std::string grade(const std::string& prompt) = 0;
};

struct JudgeConfig {
  std::string prompt_template;  // with {ground_truth} and {draft} slots
  int grade_min = 0;
  int grade_max = 10;
};

std::string render_judge_prompt(const JudgeConfig& config, const Draft& draft,
                                const Draft& ground_truth);

// Caller must gate on formal_pass first. An unparseable or out-of-range
// judge response is retried once, then recorded as an absent grade with a
// violation.
RewardScore soft_reward(const Draft& draft, const Draft& ground_truth, JudgeService& judge,
                        const JudgeConfig& config);

// Deterministic rubric judge for offline runs: re-extracts the reference
// and submission from the rendered prompt (same wire contract as a real
// judge) and grades property-by-property with partial credit, so e.g. a
// truncated title still earns an intermediate grade.
class StubJudge : public JudgeService {
 public:
  std::string grade(const std::string& prompt) override;
  int calls() const { return calls_; }

 private:
  int calls_ = 0;
};

}  // namespace showprog::triples
