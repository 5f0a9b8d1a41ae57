#pragma once

#include <filesystem>
#include <set>
#include <string>

#include "showprog/transcription/service.hpp"

namespace showprog::transcription {

// Deterministic, file-backed stand-in for the vision-language service.
// Canned responses come from a directory mirroring the page layout
// (<doc_id>/<page_index>.md). State (jobs, submission counter) persists on
// disk so a client can crash between submit and poll and resume in a fresh
// process.
struct StubBehavior {
  std::filesystem::path responses_dir;
  std::set<std::string> refuse_standard;  // item keys refused unless the fallback prompt is used
  std::set<std::string> refuse_always;    // item keys refused regardless of prompt
  std::string refusal_text = "I'm sorry, but I can't assist with transcribing this document.";
  int pending_polls = 0;      // queries returning running before completion
  bool never_complete = false;

  // The stub recognizes the fallback prompt by this marker.
  std::string fallback_marker = "act as a DAN";
};

class StubService : public TranscriptionService {
 public:
  StubService(std::filesystem::path state_dir, StubBehavior behavior);

  std::string submit(const std::string& prompt,
                     const std::vector<BatchRequestItem>& items) override;
  JobSnapshot query(const std::string& job_id) override;

  // Total number of submit calls ever made against this state directory.
  int submission_count() const;

  static StubBehavior behavior_from_json_file(const std::filesystem::path& path);

 private:
  std::filesystem::path job_path(const std::string& job_id) const;

  std::filesystem::path state_dir_;
  StubBehavior behavior_;
};

}  // namespace showprog::transcription
