#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "showprog/ontology/vocab.hpp"

namespace showprog::ontology {

// Three-tier performing-arts model: a Work concept (A) is a director's
// staging idea; a Production (B) realizes it at a venue over a timespan;
// Show events (C) are the individual dated performances. B references A
// and C references B, never the reverse.

struct LangString {
  std::string text;
  std::string lang = "fr";
  bool operator==(const LangString&) const = default;
};

// ISO calendar dates; show-level values may carry a time of day.
struct Timespan {
  std::optional<std::string> begin;
  std::optional<std::string> end;
  bool operator==(const Timespan&) const = default;
};

// relation names the flavour of influence and fixes the target's kind:
// person, group, text or object.
struct InfluenceRef {
  std::string target_id;
  std::string relation;
  bool operator==(const InfluenceRef&) const = default;
};

struct RoleAssignment {
  std::string agent_id;
  std::string role;  // term id in the roles vocabulary
  bool operator==(const RoleAssignment&) const = default;
};

struct CastChange {
  std::string agent_id;
  std::string role;
  bool removed = false;
  bool operator==(const CastChange&) const = default;
};

struct WorkConcept {
  std::string id;
  LangString title;
  std::optional<std::string> director_id;
  std::optional<int> year;
  std::vector<InfluenceRef> influences;
};

inline constexpr const char* kPerformancesAat = "300069200";

struct Production {
  std::string id;
  std::string realizes_id;
  LangString title;
  std::optional<std::string> venue_id;
  Timespan timespan;
  std::vector<RoleAssignment> cast;
  std::vector<std::string> funder_ids;
  std::string classification = kPerformancesAat;
};

struct ShowEvent {
  std::string id;
  std::string part_of_id;
  std::optional<std::string> date;
  std::optional<std::string> time;  // "HH:MM"
  std::optional<int> duration_minutes;
  std::vector<CastChange> cast_changes;
  std::optional<std::string> notes;
};

struct Person {
  std::string id;
  std::string name;
};
struct Place {
  std::string id;
  std::string name;
};
struct Group {
  std::string id;
  std::string name;
};
// External influence target that is not an agent: a dramatic text or a
// physical object.
struct RefItem {
  std::string id;
  std::string name;
  bool is_text = true;
};

using Entity =
    std::variant<WorkConcept, Production, ShowEvent, Person, Place, Group, RefItem>;

enum class EntityKind { work, production, show, person, place, group, text_item, object_item };

EntityKind kind_of(const Entity& e);
const std::string& id_of(const Entity& e);
const char* tier_dir(EntityKind kind);  // directory segment per tier

struct Violation {
  std::string entity_id;
  std::string rule;
  std::string message;
  bool operator==(const Violation&) const = default;
};

struct ValidationResult {
  std::vector<Violation> violations;  // invariant breaches
  std::vector<Violation> warnings;    // partial data, valid by design
  bool ok() const { return violations.empty(); }
};

class ProductionGraph {
 public:
  // Dangling references are fine until validate(); duplicate ids are not.
  void add_entity(Entity entity);
  bool has(const std::string& id) const { return entities_.count(id) > 0; }
  const Entity* find(const std::string& id) const;
  const std::map<std::string, Entity>& entities() const { return entities_; }
  std::size_t size() const { return entities_.size(); }

  ValidationResult validate(const Vocabulary& roles, const Vocabulary& aat) const;

 private:
  std::map<std::string, Entity> entities_;
};

bool is_iso_date(const std::string& s);

// Deterministic IRIs: base + tier path + slug. The same (kind, name) pair
// always mints the same IRI; distinct names colliding on a slug get a
// numeric suffix.
class IriMinter {
 public:
  explicit IriMinter(std::string base_iri);
  std::string mint(EntityKind kind, const std::string& name);
  const std::string& base() const { return base_; }

 private:
  std::string base_;
  std::map<std::string, std::string> by_name_;  // kind|name -> iri
  std::map<std::string, std::string> by_iri_;   // iri -> kind|name
};

}  // namespace showprog::ontology
