#include "showprog/triples/draft.hpp"

#include <array>
#include <sstream>

#include "showprog/support/errors.hpp"
#include "showprog/support/text.hpp"

namespace showprog::triples {

namespace {

enum class Tok {
  thinking_start,
  thinking_end,
  strategy_start,
  strategy_end,
  data_start,
  data_end,
  subject,
  property,
  object,
  end_of_input,
};

struct Token {
  Tok kind;
  std::size_t offset;     // byte offset of "<|"
  std::string following;  // raw text up to the next token
};

constexpr std::array<std::pair<const char*, Tok>, 9> kTokenNames = {{
    {"thinking_start", Tok::thinking_start},
    {"thinking_end", Tok::thinking_end},
    {"strategy_start", Tok::strategy_start},
    {"strategy_end", Tok::strategy_end},
    {"data_start", Tok::data_start},
    {"data_end", Tok::data_end},
    {"subject", Tok::subject},
    {"property", Tok::property},
    {"object", Tok::object},
}};

std::vector<Token> tokenize(const std::string& raw) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  std::size_t first = raw.find("<|");
  if (first == std::string::npos) {
    throw MalformedDraftError("draft contains no delimiters", 0);
  }
  pos = first;
  while (pos < raw.size()) {
    std::size_t open = raw.find("<|", pos);
    if (open == std::string::npos) break;
    std::size_t close = raw.find("|>", open + 2);
    if (close == std::string::npos) {
      throw MalformedDraftError("unterminated delimiter", open);
    }
    std::string name = raw.substr(open + 2, close - open - 2);
    Tok kind = Tok::end_of_input;
    for (const auto& [n, k] : kTokenNames) {
      if (name == n) {
        kind = k;
        break;
      }
    }
    if (kind == Tok::end_of_input) {
      throw MalformedDraftError("unknown delimiter <|" + name + "|>", open);
    }
    std::size_t text_start = close + 2;
    std::size_t next = raw.find("<|", text_start);
    std::size_t text_end = next == std::string::npos ? raw.size() : next;
    tokens.push_back({kind, open, raw.substr(text_start, text_end - text_start)});
    pos = text_end;
  }
  return tokens;
}

// Tolerant reader for the python-ish structured literal. Mixed quote
// characters (a value opened with ' may close with ") are accepted; the
// renderer writes the canonical single-quote form.
class LiteralReader {
 public:
  explicit LiteralReader(const std::string& s) : s_(s) {}

  bool read(ObjectValue* out) {
    skip_ws();
    if (!eat('{')) return false;
    std::string text;
    std::string language;
    bool have_text = false;
    for (;;) {
      skip_ws();
      if (eat('}')) break;
      std::string key;
      if (!read_string(&key)) return false;
      skip_ws();
      if (!eat(':')) return false;
      skip_ws();
      std::string value;
      if (!read_string(&value)) return false;
      if (key == "text") {
        text = value;
        have_text = true;
      } else if (key == "language") {
        language = value;
      }
      skip_ws();
      if (eat(',')) continue;
      skip_ws();
      if (eat('}')) break;
      return false;
    }
    skip_ws();
    if (pos_ != s_.size()) return false;
    if (!have_text) return false;
    out->text = text;
    out->language = language;
    return true;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\n' || s_[pos_] == '\r' ||
                                s_[pos_] == '\t')) {
      ++pos_;
    }
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool structural(char c) {
    return c == ':' || c == ',' || c == '}' || c == ' ' || c == '\n' || c == '\r' || c == '\t';
  }

  bool read_string(std::string* out) {
    if (pos_ >= s_.size() || (s_[pos_] != '\'' && s_[pos_] != '"')) return false;
    ++pos_;  // opener; the closer may be either quote character
    std::string value;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\\' && pos_ + 1 < s_.size()) {
        value.push_back(s_[pos_ + 1]);
        pos_ += 2;
        continue;
      }
      if (c == '\'' || c == '"') {
        // only treat it as the closer when a structural character (or the
        // end) follows; keeps interior apostrophes intact
        std::size_t after = pos_ + 1;
        while (after < s_.size() && (s_[after] == ' ' || s_[after] == '\t')) ++after;
        if (after >= s_.size() || structural(s_[after])) {
          ++pos_;
          *out = value;
          return true;
        }
      }
      value.push_back(c);
      ++pos_;
    }
    return false;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

ObjectValue parse_object_value(const std::string& raw) {
  std::string trimmed = showprog::text::trim(raw);
  ObjectValue out;
  if (!trimmed.empty() && trimmed.front() == '{') {
    LiteralReader reader(trimmed);
    if (reader.read(&out)) return out;
  }
  out.text = trimmed;
  out.language.reset();
  return out;
}

std::string escape_literal(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

const Triple* Draft::find_property(const std::string& label) const {
  for (const Triple& t : triples) {
    if (t.property == label) return &t;
  }
  return nullptr;
}

Draft parse_draft(const std::string& raw) {
  std::vector<Token> tokens = tokenize(raw);
  Draft draft;
  std::size_t i = 0;
  auto at = [&](std::size_t k) -> const Token& { return tokens[k]; };

  if (i < tokens.size() && at(i).kind == Tok::thinking_start) {
    if (i + 1 >= tokens.size() || at(i + 1).kind != Tok::thinking_end) {
      throw MalformedDraftError("unbalanced thinking section", at(i).offset);
    }
    draft.thinking = text::trim(at(i).following);
    i += 2;
  }
  if (i < tokens.size() && at(i).kind == Tok::strategy_start) {
    if (i + 1 >= tokens.size() || at(i + 1).kind != Tok::strategy_end) {
      throw MalformedDraftError("unbalanced strategy section", at(i).offset);
    }
    draft.strategy = text::trim(at(i).following);
    i += 2;
  }
  if (i >= tokens.size() || at(i).kind != Tok::data_start) {
    std::size_t offset = i < tokens.size() ? at(i).offset : raw.size();
    throw MalformedDraftError("missing data section", offset);
  }
  ++i;
  if (i >= tokens.size() || at(i).kind != Tok::subject) {
    std::size_t offset = i < tokens.size() ? at(i).offset : raw.size();
    throw MalformedDraftError("data section must open with a subject", offset);
  }
  draft.subject = text::trim(at(i).following);
  if (draft.subject.empty()) {
    throw MalformedDraftError("empty subject", at(i).offset);
  }
  ++i;
  bool closed = false;
  while (i < tokens.size()) {
    if (at(i).kind == Tok::data_end) {
      closed = true;
      ++i;
      break;
    }
    if (at(i).kind != Tok::property) {
      throw MalformedDraftError("expected a property delimiter", at(i).offset);
    }
    if (i + 1 >= tokens.size() || at(i + 1).kind != Tok::object) {
      throw MalformedDraftError("property without object", at(i).offset);
    }
    Triple t;
    t.property = text::trim(at(i).following);
    t.object = parse_object_value(at(i + 1).following);
    if (t.property.empty()) throw MalformedDraftError("empty property label", at(i).offset);
    draft.triples.push_back(std::move(t));
    i += 2;
  }
  if (!closed) {
    throw MalformedDraftError("missing <|data_end|>", raw.size());
  }
  if (i != tokens.size()) {
    throw MalformedDraftError("trailing content after <|data_end|>", at(i).offset);
  }
  if (draft.triples.empty()) {
    throw MalformedDraftError("draft has no triples", raw.size());
  }
  return draft;
}

std::string render_draft(const Draft& draft) {
  std::ostringstream out;
  out << "<|thinking_start|>" << draft.thinking << "<|thinking_end|>\n";
  out << "<|strategy_start|>" << draft.strategy << "<|strategy_end|>\n";
  out << "<|data_start|>\n";
  out << "<|subject|>" << draft.subject << "\n";
  for (const Triple& t : draft.triples) {
    out << "<|property|>" << t.property << "<|object|>";
    if (t.object.structured()) {
      out << "{'text': '" << escape_literal(t.object.text) << "', 'language': '"
          << escape_literal(*t.object.language) << "'}";
    } else {
      out << t.object.text;
    }
    out << "\n";
  }
  out << "<|data_end|>\n";
  return out.str();
}

}  // namespace showprog::triples
