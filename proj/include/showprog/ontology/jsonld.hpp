#pragma once

#include <map>
#include <string>
#include <vector>

#include "showprog/ontology/model.hpp"

namespace showprog::ontology {

inline constexpr const char* kLinkedArtContext = "https://linked.art/ns/v1/linked-art.json";

// One JSON-LD document per top-level entity, deterministic key order,
// vocabulary terms as full IRIs. Keys are relative paths
// "<tier>/<slug>.json". Refuses invalid graphs (violations in the message).
std::map<std::string, std::string> to_jsonld(const ProductionGraph& graph, const Vocabulary& roles,
                                             const Vocabulary& aat);

// Single-document inverse; throws ParseError (malformed JSON, with
// location) or UnsupportedPatternError (unknown top-level class).
Entity entity_from_jsonld(const std::string& document, const Vocabulary& roles);

ProductionGraph graph_from_jsonld(const std::vector<std::string>& documents,
                                  const Vocabulary& roles);

std::string entity_relpath(const Entity& entity);

}  // namespace showprog::ontology
