#include "showprog/transcription/runner.hpp"

#include <chrono>
#include <thread>

#include "showprog/imaging/pnm.hpp"
#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"
#include "showprog/support/text.hpp"

namespace showprog::transcription {

Clock Clock::real() {
  Clock c;
  c.now_ms = [] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  };
  c.sleep_ms = [](std::int64_t ms) { std::this_thread::sleep_for(std::chrono::milliseconds(ms)); };
  return c;
}

BatchRunner::BatchRunner(TranscriptionService& service, RunnerConfig config, JobJournal& journal,
                         Clock clock)
    : service_(service), config_(std::move(config)), journal_(journal), clock_(std::move(clock)) {}

bool BatchRunner::is_refusal(const std::string& response_text) const {
  std::string folded = text::fold_case(response_text);
  for (const std::string& pattern : config_.refusal_patterns) {
    if (folded.find(text::fold_case(pattern)) != std::string::npos) return true;
  }
  return false;
}

BatchJob BatchRunner::submit_batch(const std::vector<imaging::PageImage>& pages,
                                   const std::string& prompt) {
  if (pages.empty()) throw InvalidInputError("cannot submit an empty batch");
  if (static_cast<int>(pages.size()) > config_.batch_size) {
    throw InvalidInputError("batch of " + std::to_string(pages.size()) + " exceeds the limit of " +
                            std::to_string(config_.batch_size) + "; split it first");
  }

  std::vector<BatchRequestItem> items;
  items.reserve(pages.size());
  for (const auto& page : pages) {
    std::vector<std::uint8_t> payload = imaging::encode_pnm(page);
    if (payload.size() > config_.byte_limit) {
      throw InvalidInputError("page " + page.doc_id + "/" + std::to_string(page.page_index) +
                              " encodes to " + std::to_string(payload.size()) +
                              " bytes, over the limit of " + std::to_string(config_.byte_limit));
    }
    items.push_back({{page.doc_id, page.page_index}, std::move(payload)});
  }

  BatchJob job;
  job.fingerprint = JobJournal::fingerprint(prompt, items);
  for (const auto& item : items) job.keys.push_back(item.key);

  if (auto open = journal_.find(job.fingerprint);
      open && open->state != JobState::done && open->state != JobState::failed) {
    job.job_id = open->job_id;
    job.state = JobState::running;
    job.resumed = true;
    return job;
  }

  job.job_id = service_.submit(prompt, items);
  job.state = JobState::queued;
  std::vector<std::string> keys;
  for (const auto& item : items) keys.push_back(item.key.key());
  journal_.record_submitted(job.job_id, job.fingerprint, keys);
  return job;
}

BatchJob BatchRunner::poll_until_done(BatchJob job) {
  const std::int64_t started = clock_.now_ms();
  const auto deadline = started + static_cast<std::int64_t>(config_.timeout_s * 1000.0);
  // deterministic jitter derived from the job id
  const std::int64_t jitter_ms = static_cast<std::int64_t>(
      (fsutil::fnv1a(job.job_id) % 1000) * config_.poll_jitter_s);

  for (;;) {
    JobSnapshot snap = service_.query(job.job_id);
    job.results.clear();
    for (const auto& [key, result] : snap.items) {
      ItemResult r = result;
      if (r.state == ItemState::done && is_refusal(r.text)) {
        r.state = ItemState::refusal;
      }
      job.results[key] = std::move(r);
    }
    if (snap.all_terminal()) {
      job.state = JobState::done;
      journal_.record_state(job.job_id, JobState::done);
      return job;
    }
    job.state = JobState::running;
    if (clock_.now_ms() >= deadline) {
      job.state = JobState::failed;
      journal_.record_state(job.job_id, JobState::failed);
      return job;
    }
    clock_.sleep_ms(static_cast<std::int64_t>(config_.poll_interval_s * 1000.0) + jitter_ms);
  }
}

PageTranscription BatchRunner::transcribe_page_with_fallback(const imaging::PageImage& page,
                                                             const PromptTemplates& prompts) {
  PageTranscription out;

  BatchJob job = submit_batch({page}, prompts.build(PromptKind::standard));
  if (!job.resumed) ++out.requests_made;
  job = poll_until_done(std::move(job));
  const std::string key = BatchItemKey{page.doc_id, page.page_index}.key();

  auto result_of = [&](const BatchJob& j) -> const ItemResult& { return j.results.at(key); };

  if (job.state == JobState::failed) {
    throw EndpointError("transcription job " + job.job_id + " timed out", true);
  }
  if (result_of(job).state == ItemState::error) {
    throw EndpointError("transcription failed for " + key + ": " + result_of(job).error, true);
  }

  if (result_of(job).state == ItemState::refusal) {
    out.used_fallback = true;
    BatchJob retry = submit_batch({page}, prompts.build(PromptKind::fallback));
    if (!retry.resumed) ++out.requests_made;
    retry = poll_until_done(std::move(retry));
    if (retry.state == JobState::failed) {
      throw EndpointError("fallback transcription job " + retry.job_id + " timed out", true);
    }
    if (result_of(retry).state == ItemState::error) {
      throw EndpointError("fallback transcription failed for " + key, true);
    }
    if (result_of(retry).state == ItemState::refusal) {
      out.refused_by_policy = true;
      out.doc.doc_id = page.doc_id;
      out.doc.page_index = page.page_index;
      out.doc.blocks = {{BlockKind::untranscribable, ""}};
      return out;
    }
    out.doc = parse_markdown(result_of(retry).text);
  } else {
    out.doc = parse_markdown(result_of(job).text);
  }
  out.doc.doc_id = page.doc_id;
  out.doc.page_index = page.page_index;
  return out;
}

}  // namespace showprog::transcription
