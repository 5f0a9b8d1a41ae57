#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace showprog::transcription {

// Wire contract shared by the in-process stub and any real adapter:
// submit returns an opaque job handle, query returns per-item terminal
// results. The payload per item is (prompt text, image bytes).

struct BatchItemKey {
  std::string doc_id;
  int page_index = 0;

  std::string key() const { return doc_id + "/" + std::to_string(page_index); }
  auto operator<=>(const BatchItemKey&) const = default;
};

struct BatchRequestItem {
  BatchItemKey key;
  std::vector<std::uint8_t> image;
};

enum class ItemState { pending, done, refusal, error };

struct ItemResult {
  ItemState state = ItemState::pending;
  std::string text;
  std::string error;
};

enum class JobState { queued, running, done, failed };

struct JobSnapshot {
  JobState state = JobState::queued;
  std::map<std::string, ItemResult> items;  // keyed by BatchItemKey::key()

  bool all_terminal() const {
    for (const auto& [_, r] : items) {
      if (r.state == ItemState::pending) return false;
    }
    return !items.empty();
  }
};

class TranscriptionService {
 public:
  virtual ~TranscriptionService() = default;
  virtual std::string submit(const std::string& prompt,
                             const std::vector<BatchRequestItem>& items) = 0;
  virtual JobSnapshot query(const std::string& job_id) = 0;
};

const char* to_string(ItemState s);
const char* to_string(JobState s);
ItemState item_state_from_string(const std::string& s);
JobState job_state_from_string(const std::string& s);

}  // namespace showprog::transcription
