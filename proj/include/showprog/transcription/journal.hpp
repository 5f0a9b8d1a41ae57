#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "showprog/transcription/service.hpp"

namespace showprog::transcription {

// Append-only job journal enabling crash-safe resumption: a batch is
// identified by a content fingerprint; if the journal already holds a
// non-terminal job for that fingerprint, the client resumes polling instead
// of resubmitting.
class JobJournal {
 public:
  explicit JobJournal(std::filesystem::path path);

  struct Entry {
    std::string job_id;
    std::string fingerprint;
    JobState state = JobState::queued;
    std::vector<std::string> item_keys;
  };

  void record_submitted(const std::string& job_id, const std::string& fingerprint,
                        const std::vector<std::string>& item_keys);
  void record_state(const std::string& job_id, JobState state);

  // Latest entry for a fingerprint, if any.
  std::optional<Entry> find(const std::string& fingerprint) const;

  const std::filesystem::path& path() const { return path_; }

  static std::string fingerprint(const std::string& prompt,
                                 const std::vector<BatchRequestItem>& items);

 private:
  std::map<std::string, Entry> replay() const;

  std::filesystem::path path_;
  int next_seq_ = 0;
};

}  // namespace showprog::transcription
