#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace showprog::ontology {

struct VocabTerm {
  std::string id;
  std::string label;
  std::string iri;
};

// Versioned plain-text term mapping (TSV: id, label, IRI). Vocabulary data
// is loaded from files, never fetched live, so runs stay deterministic.
class Vocabulary {
 public:
  static Vocabulary load(const std::filesystem::path& path);
  static Vocabulary parse(const std::string& tsv);

  void add(VocabTerm term);
  const VocabTerm* find(const std::string& id) const;
  const VocabTerm* find_by_iri(const std::string& iri) const;
  std::size_t size() const { return terms_.size(); }

 private:
  std::map<std::string, VocabTerm> terms_;
  std::map<std::string, std::string> by_iri_;
};

}  // namespace showprog::ontology
