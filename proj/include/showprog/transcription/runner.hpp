#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "showprog/imaging/image.hpp"
#include "showprog/transcription/journal.hpp"
#include "showprog/transcription/markdown.hpp"
#include "showprog/transcription/prompt.hpp"
#include "showprog/transcription/service.hpp"

namespace showprog::transcription {

struct RunnerConfig {
  int batch_size = 50;
  std::size_t byte_limit = 5'000'000;  // encoded payload bound per image
  double poll_interval_s = 10.0;
  double poll_jitter_s = 1.0;
  double timeout_s = 7200.0;
  std::vector<std::string> refusal_patterns = {
      "i can't assist", "i cannot assist", "i can't help", "i cannot help",
      "unable to comply", "content policy"};
};

// Injectable time source so timeout behaviour is testable without waiting.
struct Clock {
  std::function<std::int64_t()> now_ms;
  std::function<void(std::int64_t)> sleep_ms;
  static Clock real();
};

struct BatchJob {
  std::string job_id;
  std::string fingerprint;
  JobState state = JobState::queued;
  std::vector<BatchItemKey> keys;
  std::map<std::string, ItemResult> results;
  bool resumed = false;  // true when submit found a persisted open job
};

struct PageTranscription {
  TranscriptionDoc doc;
  int requests_made = 0;
  bool used_fallback = false;
  bool refused_by_policy = false;  // refusal persisted through the fallback prompt
};

class BatchRunner {
 public:
  BatchRunner(TranscriptionService& service, RunnerConfig config, JobJournal& journal,
              Clock clock = Clock::real());

  // Validates sizes and count, then submits — unless the journal already
  // holds an open job for the same fingerprint, which is resumed instead.
  BatchJob submit_batch(const std::vector<imaging::PageImage>& pages, const std::string& prompt);

  // Polls until every item is terminal or the timeout elapses; refusals are
  // flagged via the configured predicate, partial results are kept.
  BatchJob poll_until_done(BatchJob job);

  // Standard prompt first; exactly one fallback retry on refusal.
  PageTranscription transcribe_page_with_fallback(const imaging::PageImage& page,
                                                  const PromptTemplates& prompts);

  bool is_refusal(const std::string& response_text) const;

 private:
  TranscriptionService& service_;
  RunnerConfig config_;
  JobJournal& journal_;
  Clock clock_;
};

}  // namespace showprog::transcription
