#pragma once

#include <optional>
#include <string>
#include <vector>

#include "showprog/ontology/model.hpp"
#include "showprog/triples/catalog.hpp"
#include "showprog/triples/draft.hpp"

namespace showprog::triples {

// Binding tokens understood by the mapper (the catalog's third column):
//   work.title               -> A title
//   work.influence:person    -> influence link + Person entity
//   production.role:<term>   -> B cast entry (role term id); the director
//                               role also fills A's director
//   production.funder        -> Group entity in B's funders
//   show.date                -> C date (French dates normalized to ISO);
//                               also supplies A's year
//   note                     -> provenance note
//   aside                    -> catalogued but unmapped; provenance side record

struct ProvenanceNote {
  std::string kind;  // "note" | "aside"
  std::string subject;
  std::string property;
  std::string value;
};

struct MappedEntities {
  std::optional<ontology::WorkConcept> work;
  std::optional<ontology::Production> production;
  std::optional<ontology::ShowEvent> show;
  std::vector<ontology::Person> persons;
  std::vector<ontology::Place> places;
  std::vector<ontology::Group> groups;
  std::vector<ProvenanceNote> notes;
  std::vector<std::string> warnings;
};

// Refuses drafts that fail the formal gate.
MappedEntities triples_to_entities(const Draft& draft, const PropertyCatalog& catalog,
                                   ontology::IriMinter& minter);

// Adds the fragments to the graph; entities that already exist (shared
// agents across drafts) are left alone.
void merge_into(ontology::ProductionGraph& graph, const MappedEntities& fragments);

// "12 juillet 1975" -> "1975-07-12"; empty when the date does not parse.
std::optional<std::string> parse_french_date(const std::string& value);

}  // namespace showprog::triples
