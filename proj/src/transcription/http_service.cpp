#include "showprog/transcription/http_service.hpp"

#include <cstdlib>

#include "showprog/support/base64.hpp"
#include "showprog/support/errors.hpp"

#include "httplib.h"
#include "json.hpp"

namespace showprog::transcription {

namespace {

// splits "http://host:port/prefix" into client target and path prefix
std::pair<std::string, std::string> split_base(const std::string& base_url) {
  std::size_t scheme = base_url.find("://");
  std::size_t path_start =
      scheme == std::string::npos ? base_url.find('/') : base_url.find('/', scheme + 3);
  if (path_start == std::string::npos) return {base_url, ""};
  std::string prefix = base_url.substr(path_start);
  if (prefix == "/") prefix = "";
  return {base_url.substr(0, path_start), prefix};
}

}  // namespace

HttpService::HttpService(std::string base_url, std::string auth_token_env)
    : base_url_(std::move(base_url)) {
  if (!auth_token_env.empty()) {
    const char* token = std::getenv(auth_token_env.c_str());
    if (!token) throw ConfigError("environment variable " + auth_token_env + " is not set");
    auth_token_ = token;
  }
}

std::string HttpService::submit(const std::string& prompt,
                                const std::vector<BatchRequestItem>& items) {
  if (items.empty()) throw InvalidInputError("cannot submit an empty batch");
  auto [host, prefix] = split_base(base_url_);
  httplib::Client client(host);
  client.set_read_timeout(60, 0);

  nlohmann::ordered_json body;
  body["prompt"] = prompt;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& item : items) {
    nlohmann::ordered_json it;
    it["key"] = item.key.key();
    it["image_b64"] = base64::encode(item.image);
    arr.push_back(std::move(it));
  }
  body["items"] = std::move(arr);

  httplib::Headers headers;
  if (!auth_token_.empty()) headers.emplace("Authorization", "Bearer " + auth_token_);

  auto res = client.Post(prefix + "/v1/batches", headers, body.dump(), "application/json");
  if (!res) throw EndpointError("transport failure submitting batch to " + base_url_, true);
  if (res->status != 200) {
    throw EndpointError("batch submit rejected with HTTP " + std::to_string(res->status),
                        res->status >= 500);
  }
  nlohmann::json j = nlohmann::json::parse(res->body);
  return j.at("job_id").get<std::string>();
}

JobSnapshot HttpService::query(const std::string& job_id) {
  auto [host, prefix] = split_base(base_url_);
  httplib::Client client(host);
  client.set_read_timeout(60, 0);

  httplib::Headers headers;
  if (!auth_token_.empty()) headers.emplace("Authorization", "Bearer " + auth_token_);

  auto res = client.Get(prefix + "/v1/batches/" + job_id, headers);
  if (!res) throw EndpointError("transport failure querying job " + job_id, true);
  if (res->status != 200) {
    throw EndpointError("job query rejected with HTTP " + std::to_string(res->status),
                        res->status >= 500);
  }
  nlohmann::json j = nlohmann::json::parse(res->body);

  JobSnapshot snap;
  snap.state = job_state_from_string(j.at("state").get<std::string>());
  for (const auto& item : j.at("items")) {
    ItemResult r;
    r.state = item_state_from_string(item.at("state").get<std::string>());
    r.text = item.value("text", "");
    r.error = item.value("error", "");
    snap.items[item.at("key").get<std::string>()] = std::move(r);
  }
  return snap;
}

}  // namespace showprog::transcription
