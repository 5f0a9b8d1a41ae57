#pragma once

#include <string>
#include <vector>

namespace showprog::transcription {

inline constexpr const char* kUntranscribable = "[UNABLE TO TRANSCRIBE]";

enum class BlockKind { title, body, page_marker, untranscribable };

struct Block {
  BlockKind kind = BlockKind::body;
  std::string text;  // title text without "# ", marker number without "PAGE "

  bool operator==(const Block&) const = default;
};

// Page transcription in the markdown dialect the extraction prompt asks
// for: "# " titles, "PAGE <n>" markers, the untranscribable sentinel, plain
// body lines.
struct TranscriptionDoc {
  std::string doc_id;
  int page_index = 0;
  std::vector<Block> blocks;

  bool untranscribable() const;
  std::string plain_text() const;  // block texts joined, markers included
};

// Total: any input parses. Trailing whitespace per line and trailing blank
// lines are dropped, so parse(render(doc)) == doc on rendered docs.
TranscriptionDoc parse_markdown(const std::string& raw);
std::string render_markdown(const TranscriptionDoc& doc);

}  // namespace showprog::transcription
