#include "showprog/triples/reward.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "showprog/evaluation/metrics.hpp"
#include "showprog/support/errors.hpp"
#include "showprog/support/text.hpp"

namespace showprog::triples {

RewardScore formal_reward(const Draft& draft, const PropertyCatalog& catalog) {
  RewardScore score;
  std::set<std::string> seen;
  for (const Triple& t : draft.triples) {
    std::string label = text::trim(t.property);
    if (!catalog.contains(label)) {
      score.violations.push_back("unknown property: " + label);
    }
    if (!seen.insert(label).second) {
      score.violations.push_back("duplicate property: " + label);
    }
  }
  score.formal_pass = score.violations.empty();
  return score;
}

std::string render_judge_prompt(const JudgeConfig& config, const Draft& draft,
                                const Draft& ground_truth) {
  if (config.prompt_template.empty()) throw ConfigError("judge prompt template is empty");
  std::string prompt = config.prompt_template;
  prompt = text::replace_all(std::move(prompt), "{ground_truth}", render_draft(ground_truth));
  prompt = text::replace_all(std::move(prompt), "{draft}", render_draft(draft));
  return prompt;
}

namespace {

std::optional<int> parse_grade(const std::string& response, const JudgeConfig& config) {
  std::string trimmed = text::trim(response);
  if (trimmed.empty() || trimmed.size() > 4) return std::nullopt;
  int value = 0;
  for (char c : trimmed) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  if (value < config.grade_min || value > config.grade_max) return std::nullopt;
  return value;
}

std::string extract_section(const std::string& prompt, const std::string& open,
                            const std::string& close) {
  std::size_t a = prompt.find(open);
  if (a == std::string::npos) return "";
  a += open.size();
  std::size_t b = prompt.find(close, a);
  if (b == std::string::npos) return "";
  return text::trim(prompt.substr(a, b - a));
}

double object_credit(const ObjectValue& expected, const ObjectValue& got) {
  if (expected == got) return 1.0;
  std::string a = text::fold_case(expected.text);
  std::string b = text::fold_case(got.text);
  if (a == b) return 1.0;  // language tag or structuring differs, content matches
  if (!a.empty() && !b.empty() &&
      (a.substr(0, std::min(a.size(), b.size())) == b.substr(0, std::min(a.size(), b.size())) ||
       showprog::evaluation::levenshtein_ratio(a, b) >= 0.5)) {
    return 0.5;  // partial success, e.g. a truncated title
  }
  return 0.0;
}

}  // namespace

RewardScore soft_reward(const Draft& draft, const Draft& ground_truth, JudgeService& judge,
                        const JudgeConfig& config) {
  RewardScore score;
  score.formal_pass = true;
  const std::string prompt = render_judge_prompt(config, draft, ground_truth);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::string response = judge.grade(prompt);
    if (auto grade = parse_grade(response, config)) {
      score.grade = grade;
      return score;
    }
    score.violations.push_back("judge returned an unusable grade: " + text::trim(response));
  }
  return score;  // grade stays absent, violations recorded
}

std::string StubJudge::grade(const std::string& prompt) {
  ++calls_;
  const std::string ref_text = extract_section(prompt, "<reference>", "</reference>");
  const std::string sub_text = extract_section(prompt, "<submission>", "</submission>");
  Draft reference, submission;
  try {
    reference = parse_draft(ref_text);
    submission = parse_draft(sub_text);
  } catch (const MalformedDraftError&) {
    return "0";
  }

  if (reference.triples.empty()) return "0";
  double credit = 0.0;
  std::vector<char> used(submission.triples.size(), 0);
  for (const Triple& expected : reference.triples) {
    for (std::size_t i = 0; i < submission.triples.size(); ++i) {
      if (used[i]) continue;
      if (submission.triples[i].property != expected.property) continue;
      used[i] = 1;
      credit += object_credit(expected.object, submission.triples[i].object);
      break;
    }
  }
  int grade = static_cast<int>(std::lround(10.0 * credit / static_cast<double>(reference.triples.size())));
  grade = std::clamp(grade, 0, 10);
  return std::to_string(grade);
}

}  // namespace showprog::triples
