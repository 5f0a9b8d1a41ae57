#pragma once

#include <string>

#include "showprog/transcription/service.hpp"

namespace showprog::transcription {

// HTTP adapter for the batch wire contract:
//   POST {base}/v1/batches   {"prompt": ..., "items": [{"key", "image_b64"}]}
//     -> {"job_id": ...}
//   GET  {base}/v1/batches/{job_id}
//     -> {"state": ..., "items": [{"key", "state", "text", "error"}]}
// The auth token, when configured, travels as a Bearer header; its value is
// read from the named environment variable, never from config files.
class HttpService : public TranscriptionService {
 public:
  HttpService(std::string base_url, std::string auth_token_env = "");

  std::string submit(const std::string& prompt,
                     const std::vector<BatchRequestItem>& items) override;
  JobSnapshot query(const std::string& job_id) override;

 private:
  std::string base_url_;
  std::string auth_token_;
};

}  // namespace showprog::transcription
