#include "showprog/transcription/markdown.hpp"

#include <sstream>

#include "showprog/support/text.hpp"

namespace showprog::transcription {

namespace {

bool is_page_marker(const std::string& line, std::string* number) {
  if (!text::starts_with(line, "PAGE ")) return false;
  std::string rest = text::trim(line.substr(5));
  if (rest.empty()) return false;
  for (char c : rest) {
    if (c < '0' || c > '9') return false;
  }
  *number = rest;
  return true;
}

std::string strip_trailing_ws(const std::string& line) {
  std::size_t e = line.size();
  while (e > 0 && (line[e - 1] == ' ' || line[e - 1] == '\t' || line[e - 1] == '\r')) --e;
  return line.substr(0, e);
}

}  // namespace

bool TranscriptionDoc::untranscribable() const {
  for (const Block& b : blocks) {
    if (b.kind == BlockKind::untranscribable) return true;
  }
  return false;
}

std::string TranscriptionDoc::plain_text() const {
  std::ostringstream out;
  bool first = true;
  for (const Block& b : blocks) {
    if (!first) out << '\n';
    first = false;
    switch (b.kind) {
      case BlockKind::page_marker: out << "PAGE " << b.text; break;
      case BlockKind::untranscribable: out << kUntranscribable; break;
      default: out << b.text; break;
    }
  }
  return out.str();
}

TranscriptionDoc parse_markdown(const std::string& raw) {
  TranscriptionDoc doc;
  for (const std::string& raw_line : text::split_lines(raw)) {
    std::string line = strip_trailing_ws(raw_line);
    Block block;
    std::string number;
    if (text::starts_with(line, "# ")) {
      block.kind = BlockKind::title;
      block.text = line.substr(2);
    } else if (is_page_marker(line, &number)) {
      block.kind = BlockKind::page_marker;
      block.text = number;
    } else if (line == kUntranscribable) {
      block.kind = BlockKind::untranscribable;
    } else {
      block.kind = BlockKind::body;
      block.text = line;
    }
    doc.blocks.push_back(std::move(block));
  }
  while (!doc.blocks.empty() && doc.blocks.back().kind == BlockKind::body &&
         doc.blocks.back().text.empty()) {
    doc.blocks.pop_back();
  }
  return doc;
}

std::string render_markdown(const TranscriptionDoc& doc) {
  std::ostringstream out;
  for (const Block& b : doc.blocks) {
    switch (b.kind) {
      case BlockKind::title: out << "# " << b.text; break;
      case BlockKind::page_marker: out << "PAGE " << b.text; break;
      case BlockKind::untranscribable: out << kUntranscribable; break;
      case BlockKind::body: out << b.text; break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace showprog::transcription
