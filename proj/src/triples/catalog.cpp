#include "showprog/triples/catalog.hpp"

#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"
#include "showprog/support/text.hpp"

namespace showprog::triples {

PropertyCatalog PropertyCatalog::load(const std::filesystem::path& path) {
  return parse(fsutil::read_file(path));
}

PropertyCatalog PropertyCatalog::parse(const std::string& tsv) {
  PropertyCatalog catalog;
  for (const std::string& raw : text::split_lines(tsv)) {
    std::string line = text::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw ParseError("malformed catalog line: " + line);
    CatalogEntry entry;
    entry.label = text::trim(line.substr(0, t1));
    entry.wikidata_id = text::trim(line.substr(t1 + 1, t2 - t1 - 1));
    entry.binding = text::trim(line.substr(t2 + 1));
    catalog.add(std::move(entry));
  }
  return catalog;
}

void PropertyCatalog::add(CatalogEntry entry) {
  if (entry.label.empty()) throw InvalidInputError("catalog label must not be empty");
  if (entry.wikidata_id.size() < 2 || entry.wikidata_id[0] != 'P') {
    throw InvalidInputError("malformed wikidata id: " + entry.wikidata_id);
  }
  for (std::size_t i = 1; i < entry.wikidata_id.size(); ++i) {
    char c = entry.wikidata_id[i];
    if (c < '0' || c > '9') throw InvalidInputError("malformed wikidata id: " + entry.wikidata_id);
  }
  if (entries_.count(entry.label)) {
    throw InvalidInputError("duplicate catalog label: " + entry.label);
  }
  entries_.emplace(entry.label, std::move(entry));
}

const CatalogEntry* PropertyCatalog::find(const std::string& label) const {
  auto it = entries_.find(text::trim(label));
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace showprog::triples
