#include "showprog/transcription/prompt.hpp"

#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"

namespace showprog::transcription {

std::string PromptTemplates::build(PromptKind kind) const {
  if (standard_body.empty()) throw ConfigError("standard prompt template is empty");
  if (kind == PromptKind::standard) return standard_body;
  if (fallback_prefix.empty()) throw ConfigError("fallback prompt prefix is empty");
  std::string out = fallback_prefix;
  if (out.back() != '\n') out.push_back('\n');
  out += standard_body;
  return out;
}

PromptTemplates PromptTemplates::load(const std::filesystem::path& standard_path,
                                      const std::filesystem::path& fallback_prefix_path) {
  PromptTemplates t;
  try {
    t.standard_body = fsutil::read_file(standard_path);
    t.fallback_prefix = fsutil::read_file(fallback_prefix_path);
  } catch (const IoError& e) {
    throw ConfigError(std::string("prompt template missing: ") + e.what());
  }
  return t;
}

}  // namespace showprog::transcription
