#include "showprog/triples/steps.hpp"

#include <cstdio>
#include <sstream>

#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"
#include "showprog/support/text.hpp"

#include "json.hpp"

namespace showprog::triples {

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

ScoredStep score_step(const StepBatch& batch, const PropertyCatalog& catalog, JudgeService& judge,
                      const StepPolicyConfig& config) {
  if (static_cast<int>(batch.problems.size()) != config.problems_per_step) {
    throw InvalidInputError("step " + std::to_string(batch.step_index) + " has " +
                            std::to_string(batch.problems.size()) + " problems, expected " +
                            std::to_string(config.problems_per_step));
  }
  for (const StepProblem& p : batch.problems) {
    if (static_cast<int>(p.drafts.size()) != config.drafts_per_problem) {
      throw InvalidInputError("problem " + p.id + " has " + std::to_string(p.drafts.size()) +
                              " drafts, expected " + std::to_string(config.drafts_per_problem));
    }
  }

  ScoredStep result;
  result.step_index = batch.step_index;
  int passes = 0;
  double grade_sum = 0.0;
  int total = 0;

  for (const StepProblem& problem : batch.problems) {
    Draft ground_truth;
    bool gt_ok = true;
    try {
      ground_truth = parse_draft(problem.ground_truth);
    } catch (const MalformedDraftError&) {
      gt_ok = false;
    }
    std::vector<RewardScore> row;
    for (const std::string& raw : problem.drafts) {
      ++total;
      RewardScore score;
      Draft draft;
      try {
        draft = parse_draft(raw);
      } catch (const MalformedDraftError& e) {
        score.formal_pass = false;
        score.violations.push_back(std::string("malformed draft: ") + e.what());
        row.push_back(std::move(score));
        continue;
      }
      score = formal_reward(draft, catalog);
      if (score.formal_pass) {
        ++passes;
        if (gt_ok) {
          RewardScore soft = soft_reward(draft, ground_truth, judge, config.judge);
          score.grade = soft.grade;
          for (const auto& v : soft.violations) score.violations.push_back(v);
        } else {
          score.violations.push_back("ground truth unavailable for " + problem.id);
        }
        if (score.grade) grade_sum += *score.grade;
      }
      row.push_back(std::move(score));
    }
    result.scores.push_back(std::move(row));
  }

  result.pass_rate = total > 0 ? static_cast<double>(passes) / total : 0.0;
  result.mean_grade = total > 0 ? grade_sum / total : 0.0;
  return result;
}

std::string step_log_line(const ScoredStep& step) {
  return "{\"step\":" + std::to_string(step.step_index) + ",\"pass_rate\":" +
         fmt4(step.pass_rate) + ",\"mean_grade\":" + fmt4(step.mean_grade) + "}";
}

std::vector<StepBatch> parse_trace_jsonl(const std::string& content) {
  std::vector<StepBatch> out;
  for (const std::string& line : text::split_lines(content)) {
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad trace line: ") + e.what());
    }
    StepBatch batch;
    batch.step_index = j.at("step").get<int>();
    for (const auto& pj : j.at("problems")) {
      StepProblem p;
      p.id = pj.at("id").get<std::string>();
      p.ground_truth = pj.at("ground_truth").get<std::string>();
      for (const auto& d : pj.at("drafts")) p.drafts.push_back(d.get<std::string>());
      batch.problems.push_back(std::move(p));
    }
    out.push_back(std::move(batch));
  }
  return out;
}

std::vector<StepBatch> load_trace_jsonl(const std::filesystem::path& path) {
  return parse_trace_jsonl(fsutil::read_file(path));
}

std::string trace_line(const StepBatch& batch) {
  nlohmann::ordered_json j;
  j["step"] = batch.step_index;
  auto problems = nlohmann::ordered_json::array();
  for (const StepProblem& p : batch.problems) {
    nlohmann::ordered_json pj;
    pj["id"] = p.id;
    pj["ground_truth"] = p.ground_truth;
    pj["drafts"] = p.drafts;
    problems.push_back(std::move(pj));
  }
  j["problems"] = std::move(problems);
  return j.dump();
}

}  // namespace showprog::triples
