#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace showprog::triples {

// Closed property set for the formal reward. TSV columns: label,
// wikidata id (P-number), ontology binding token. Labels are matched
// case-sensitively after trimming; there is no fuzzy matching — the formal
// reward is a hard constraint.
struct CatalogEntry {
  std::string label;
  std::string wikidata_id;
  std::string binding;
};

class PropertyCatalog {
 public:
  static PropertyCatalog load(const std::filesystem::path& path);
  static PropertyCatalog parse(const std::string& tsv);

  void add(CatalogEntry entry);
  const CatalogEntry* find(const std::string& label) const;
  bool contains(const std::string& label) const { return find(label) != nullptr; }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, CatalogEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, CatalogEntry> entries_;
};

}  // namespace showprog::triples
