#include "showprog/ontology/vocab.hpp"

#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"
#include "showprog/support/text.hpp"

namespace showprog::ontology {

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  return parse(fsutil::read_file(path));
}

Vocabulary Vocabulary::parse(const std::string& tsv) {
  Vocabulary v;
  for (const std::string& raw : text::split_lines(tsv)) {
    std::string line = text::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw ParseError("malformed vocabulary line: " + line);
    VocabTerm term;
    term.id = text::trim(line.substr(0, t1));
    term.label = text::trim(line.substr(t1 + 1, t2 - t1 - 1));
    term.iri = text::trim(line.substr(t2 + 1));
    v.add(std::move(term));
  }
  return v;
}

void Vocabulary::add(VocabTerm term) {
  by_iri_[term.iri] = term.id;
  terms_[term.id] = std::move(term);
}

const VocabTerm* Vocabulary::find(const std::string& id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? nullptr : &it->second;
}

const VocabTerm* Vocabulary::find_by_iri(const std::string& iri) const {
  auto it = by_iri_.find(iri);
  return it == by_iri_.end() ? nullptr : find(it->second);
}

}  // namespace showprog::ontology
