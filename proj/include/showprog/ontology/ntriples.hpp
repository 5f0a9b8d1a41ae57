#pragma once

#include <string>

#include "showprog/ontology/model.hpp"

namespace showprog::ontology {

// Deterministic N-Triples export: lines sorted lexicographically,
// language-tagged literals carry their tags, extension predicates live
// under <ns_base>ns/. Refuses invalid graphs.
std::string to_ntriples(const ProductionGraph& graph, const Vocabulary& roles,
                        const Vocabulary& aat, const std::string& ns_base);

std::string escape_ntriples_literal(const std::string& s);

}  // namespace showprog::ontology
