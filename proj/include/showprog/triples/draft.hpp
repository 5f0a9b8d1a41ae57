#pragma once

#include <optional>
#include <string>
#include <vector>

namespace showprog::triples {

// One property/object pair from a generated draft. Structured literals of
// the form {'text': ..., 'language': ...} are normalized into language-
// tagged values; anything else stays verbatim text.
struct ObjectValue {
  std::string text;
  std::optional<std::string> language;

  bool structured() const { return language.has_value(); }
  bool operator==(const ObjectValue&) const = default;
};

struct Triple {
  std::string property;
  ObjectValue object;
  bool operator==(const Triple&) const = default;
};

// Token-delimited generation output: a thinking trace, a strategy trace and
// a data section with one subject and its property/object pairs.
struct Draft {
  std::string thinking;
  std::string strategy;
  std::string subject;
  std::vector<Triple> triples;

  bool operator==(const Draft&) const = default;
  const Triple* find_property(const std::string& label) const;
};

// Exact tokenizer for the <|...|> delimiters. Sections must appear in
// order; thinking and strategy may be absent. Throws MalformedDraftError
// (with byte offset) on unbalanced or unknown delimiters, a missing data
// section, an empty subject or zero triples.
Draft parse_draft(const std::string& raw);

// Canonical form; parse(render(parse(x))) == parse(x).
std::string render_draft(const Draft& draft);

}  // namespace showprog::triples
