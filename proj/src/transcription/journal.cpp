#include "showprog/transcription/journal.hpp"

#include <fstream>

#include "showprog/support/fsutil.hpp"

#include "json.hpp"

namespace showprog::transcription {

JobJournal::JobJournal(std::filesystem::path path) : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) ++next_seq_;
    }
  }
}

void JobJournal::record_submitted(const std::string& job_id, const std::string& fingerprint,
                                  const std::vector<std::string>& item_keys) {
  nlohmann::ordered_json j;
  j["seq"] = next_seq_++;
  j["event"] = "submitted";
  j["job_id"] = job_id;
  j["fingerprint"] = fingerprint;
  j["items"] = item_keys;
  fsutil::append_line(path_, j.dump());
}

void JobJournal::record_state(const std::string& job_id, JobState state) {
  nlohmann::ordered_json j;
  j["seq"] = next_seq_++;
  j["event"] = "state";
  j["job_id"] = job_id;
  j["state"] = to_string(state);
  fsutil::append_line(path_, j.dump());
}

std::map<std::string, JobJournal::Entry> JobJournal::replay() const {
  std::map<std::string, Entry> by_job;
  if (!std::filesystem::exists(path_)) return by_job;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    std::string event = j["event"].get<std::string>();
    if (event == "submitted") {
      Entry e;
      e.job_id = j["job_id"].get<std::string>();
      e.fingerprint = j["fingerprint"].get<std::string>();
      e.state = JobState::queued;
      for (const auto& k : j["items"]) e.item_keys.push_back(k.get<std::string>());
      by_job[e.job_id] = std::move(e);
    } else if (event == "state") {
      auto it = by_job.find(j["job_id"].get<std::string>());
      if (it != by_job.end()) it->second.state = job_state_from_string(j["state"].get<std::string>());
    }
  }
  return by_job;
}

std::optional<JobJournal::Entry> JobJournal::find(const std::string& fingerprint) const {
  std::optional<Entry> latest;
  for (const auto& [_, entry] : replay()) {
    if (entry.fingerprint == fingerprint) latest = entry;
  }
  return latest;
}

std::string JobJournal::fingerprint(const std::string& prompt,
                                    const std::vector<BatchRequestItem>& items) {
  std::uint64_t h = fsutil::fnv1a(prompt);
  for (const auto& item : items) {
    h = fsutil::fnv1a(item.key.key(), h);
    h = fsutil::fnv1a(std::string_view(reinterpret_cast<const char*>(item.image.data()),
                                       item.image.size()),
                      h);
  }
  return fsutil::hex64(h);
}

}  // namespace showprog::transcription
