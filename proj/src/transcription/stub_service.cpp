#include "showprog/transcription/stub_service.hpp"

#include <fstream>

#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"

#include "json.hpp"

namespace showprog::transcription {

const char* to_string(ItemState s) {
  switch (s) {
    case ItemState::pending: return "pending";
    case ItemState::done: return "done";
    case ItemState::refusal: return "refusal";
    case ItemState::error: return "error";
  }
  return "pending";
}

const char* to_string(JobState s) {
  switch (s) {
    case JobState::queued: return "queued";
    case JobState::running: return "running";
    case JobState::done: return "done";
    case JobState::failed: return "failed";
  }
  return "queued";
}

ItemState item_state_from_string(const std::string& s) {
  if (s == "done") return ItemState::done;
  if (s == "refusal") return ItemState::refusal;
  if (s == "error") return ItemState::error;
  return ItemState::pending;
}

JobState job_state_from_string(const std::string& s) {
  if (s == "running") return JobState::running;
  if (s == "done") return JobState::done;
  if (s == "failed") return JobState::failed;
  return JobState::queued;
}

StubService::StubService(std::filesystem::path state_dir, StubBehavior behavior)
    : state_dir_(std::move(state_dir)), behavior_(std::move(behavior)) {
  std::filesystem::create_directories(state_dir_);
}

std::filesystem::path StubService::job_path(const std::string& job_id) const {
  return state_dir_ / (job_id + ".json");
}

std::string StubService::submit(const std::string& prompt,
                                const std::vector<BatchRequestItem>& items) {
  if (items.empty()) throw InvalidInputError("cannot submit an empty batch");

  int count = submission_count() + 1;
  fsutil::write_file(state_dir_ / "submissions", std::to_string(count));

  std::string job_id = "stub-job-" + std::to_string(count);
  const bool fallback = prompt.find(behavior_.fallback_marker) != std::string::npos;

  nlohmann::ordered_json j;
  j["job_id"] = job_id;
  j["fallback"] = fallback;
  j["polls_left"] = behavior_.never_complete ? -1 : behavior_.pending_polls;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& item : items) arr.push_back(item.key.key());
  j["items"] = arr;
  fsutil::write_file(job_path(job_id), j.dump(2) + "\n");
  return job_id;
}

JobSnapshot StubService::query(const std::string& job_id) {
  std::filesystem::path path = job_path(job_id);
  if (!std::filesystem::exists(path)) {
    throw EndpointError("unknown job id: " + job_id, false);
  }
  nlohmann::json j = nlohmann::json::parse(fsutil::read_file(path));

  JobSnapshot snap;
  int polls_left = j["polls_left"].get<int>();
  if (polls_left != 0) {
    snap.state = JobState::running;
    for (const auto& key : j["items"]) {
      snap.items[key.get<std::string>()] = ItemResult{};
    }
    if (polls_left > 0) {
      j["polls_left"] = polls_left - 1;
      fsutil::write_file(path, j.dump(2) + "\n");
    }
    return snap;
  }

  const bool fallback = j["fallback"].get<bool>();
  snap.state = JobState::done;
  for (const auto& key_json : j["items"]) {
    std::string key = key_json.get<std::string>();
    ItemResult r;
    const bool refused = behavior_.refuse_always.count(key) > 0 ||
                         (!fallback && behavior_.refuse_standard.count(key) > 0);
    if (refused) {
      r.state = ItemState::done;  // provider answers; the text carries the refusal
      r.text = behavior_.refusal_text;
    } else {
      std::filesystem::path response = behavior_.responses_dir / (key + ".md");
      if (std::filesystem::exists(response)) {
        r.state = ItemState::done;
        r.text = fsutil::read_file(response);
      } else {
        r.state = ItemState::error;
        r.error = "no canned response for " + key;
      }
    }
    snap.items[key] = std::move(r);
  }
  return snap;
}

int StubService::submission_count() const {
  std::filesystem::path path = state_dir_ / "submissions";
  if (!std::filesystem::exists(path)) return 0;
  return std::stoi(fsutil::read_file(path));
}

StubBehavior StubService::behavior_from_json_file(const std::filesystem::path& path) {
  nlohmann::json j = nlohmann::json::parse(fsutil::read_file(path));
  StubBehavior b;
  b.responses_dir = j.value("responses_dir", std::string());
  for (const auto& k : j.value("refuse_standard", std::vector<std::string>{})) b.refuse_standard.insert(k);
  for (const auto& k : j.value("refuse_always", std::vector<std::string>{})) b.refuse_always.insert(k);
  if (j.contains("refusal_text")) b.refusal_text = j["refusal_text"].get<std::string>();
  b.pending_polls = j.value("pending_polls", 0);
  b.never_complete = j.value("never_complete", false);
  return b;
}

}  // namespace showprog::transcription
