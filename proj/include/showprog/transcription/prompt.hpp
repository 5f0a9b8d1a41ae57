#pragma once

#include <filesystem>
#include <string>

namespace showprog::transcription {

enum class PromptKind { standard, fallback };

// Prompt texts live in plain files so they stay auditable and swappable.
// The fallback prompt is the permissive prefix concatenated ahead of the
// standard extraction prompt; it is only used after a refusal.
struct PromptTemplates {
  std::string standard_body;
  std::string fallback_prefix;

  std::string build(PromptKind kind) const;

  static PromptTemplates load(const std::filesystem::path& standard_path,
                              const std::filesystem::path& fallback_prefix_path);
};

}  // namespace showprog::transcription
