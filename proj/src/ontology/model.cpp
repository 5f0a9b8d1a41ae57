#include "showprog/ontology/model.hpp"

#include <algorithm>
#include <set>

#include "showprog/support/errors.hpp"
#include "showprog/support/text.hpp"

namespace showprog::ontology {

EntityKind kind_of(const Entity& e) {
  if (std::holds_alternative<WorkConcept>(e)) return EntityKind::work;
  if (std::holds_alternative<Production>(e)) return EntityKind::production;
  if (std::holds_alternative<ShowEvent>(e)) return EntityKind::show;
  if (std::holds_alternative<Person>(e)) return EntityKind::person;
  if (std::holds_alternative<Place>(e)) return EntityKind::place;
  if (std::holds_alternative<Group>(e)) return EntityKind::group;
  const auto& item = std::get<RefItem>(e);
  return item.is_text ? EntityKind::text_item : EntityKind::object_item;
}

const std::string& id_of(const Entity& e) {
  return std::visit([](const auto& x) -> const std::string& { return x.id; }, e);
}

const char* tier_dir(EntityKind kind) {
  switch (kind) {
    case EntityKind::work: return "work";
    case EntityKind::production: return "production";
    case EntityKind::show: return "show";
    case EntityKind::person: return "person";
    case EntityKind::place: return "place";
    case EntityKind::group: return "group";
    case EntityKind::text_item: return "text";
    case EntityKind::object_item: return "object";
  }
  return "entity";
}

void ProductionGraph::add_entity(Entity entity) {
  const std::string& id = id_of(entity);
  if (id.empty()) throw InvalidInputError("entity id must not be empty");
  if (entities_.count(id)) throw ConflictError("duplicate entity id: " + id);
  entities_.emplace(id, std::move(entity));
}

const Entity* ProductionGraph::find(const std::string& id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

bool is_iso_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  int month = (s[5] - '0') * 10 + (s[6] - '0');
  int day = (s[8] - '0') * 10 + (s[9] - '0');
  static const int days[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return month >= 1 && month <= 12 && day >= 1 && day <= days[month - 1];
}

namespace {

class Validator {
 public:
  Validator(const ProductionGraph& graph, const Vocabulary& roles, const Vocabulary& aat)
      : graph_(graph), roles_(roles), aat_(aat) {}

  ValidationResult run() {
    for (const auto& [id, entity] : graph_.entities()) {
      std::visit([&](const auto& e) { check(e); }, entity);
    }
    coverage_warnings();
    return std::move(result_);
  }

 private:
  void violation(const std::string& id, const std::string& rule, const std::string& msg) {
    result_.violations.push_back({id, rule, msg});
  }
  void warning(const std::string& id, const std::string& rule, const std::string& msg) {
    result_.warnings.push_back({id, rule, msg});
  }

  // true when the reference resolves to the expected kind
  bool check_ref(const std::string& from, const std::string& to,
                 std::initializer_list<EntityKind> kinds, const std::string& field) {
    const Entity* target = graph_.find(to);
    if (!target) {
      violation(from, "referential-integrity", field + " references missing entity " + to);
      return false;
    }
    EntityKind k = kind_of(*target);
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) {
      violation(from, "reference-kind", field + " references " + to + " of the wrong kind");
      return false;
    }
    return true;
  }

  void check(const WorkConcept& a) {
    if (a.title.text.empty()) violation(a.id, "title", "work concept has an empty title");
    if (a.director_id) {
      check_ref(a.id, *a.director_id, {EntityKind::person}, "director");
    } else {
      warning(a.id, "partial-data", "work concept has no director yet");
    }
    if (!a.year) warning(a.id, "partial-data", "work concept has no year yet");
    for (const InfluenceRef& inf : a.influences) {
      if (inf.relation == "person") {
        check_ref(a.id, inf.target_id, {EntityKind::person}, "influence");
      } else if (inf.relation == "group") {
        check_ref(a.id, inf.target_id, {EntityKind::group}, "influence");
      } else if (inf.relation == "text") {
        check_ref(a.id, inf.target_id, {EntityKind::text_item}, "influence");
      } else if (inf.relation == "object") {
        check_ref(a.id, inf.target_id, {EntityKind::object_item}, "influence");
      } else {
        violation(a.id, "influence-relation", "unknown influence relation: " + inf.relation);
      }
    }
  }

  void check(const Production& b) {
    if (b.realizes_id.empty()) {
      violation(b.id, "realizes", "production must realize exactly one work concept");
    } else {
      check_ref(b.id, b.realizes_id, {EntityKind::work}, "realizes");
    }
    if (b.venue_id) check_ref(b.id, *b.venue_id, {EntityKind::place}, "venue");
    check_timespan(b.id, b.timespan);
    if (!b.timespan.begin && !b.timespan.end) {
      warning(b.id, "partial-data", "production has no timespan yet");
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const RoleAssignment& ra : b.cast) {
      check_ref(b.id, ra.agent_id, {EntityKind::person, EntityKind::group}, "cast");
      if (!roles_.find(ra.role)) {
        violation(b.id, "role-vocabulary", "role term not in vocabulary: " + ra.role);
      }
      if (!seen.insert({ra.agent_id, ra.role}).second) {
        violation(b.id, "duplicate-role",
                  "duplicate (agent, role) pair: " + ra.agent_id + ", " + ra.role);
      }
    }
    for (const std::string& funder : b.funder_ids) {
      check_ref(b.id, funder, {EntityKind::group}, "funder");
    }
    if (!aat_.find(b.classification)) {
      violation(b.id, "classification", "classification term not in vocabulary: " + b.classification);
    }
  }

  void check(const ShowEvent& c) {
    const Entity* parent = nullptr;
    if (c.part_of_id.empty()) {
      violation(c.id, "part-of", "show must belong to exactly one production");
    } else if (check_ref(c.id, c.part_of_id, {EntityKind::production}, "part_of")) {
      parent = graph_.find(c.part_of_id);
    }
    if (c.date) {
      if (!is_iso_date(*c.date)) {
        violation(c.id, "date", "not an ISO calendar date: " + *c.date);
      } else if (parent) {
        const auto& b = std::get<Production>(*parent);
        if (b.timespan.begin && *c.date < *b.timespan.begin) {
          violation(c.id, "timespan", "show date " + *c.date + " before production start");
        }
        if (b.timespan.end && *c.date > *b.timespan.end) {
          violation(c.id, "timespan", "show date " + *c.date + " after production end");
        }
      }
    } else {
      warning(c.id, "partial-data", "show has no date yet");
    }
    if (c.duration_minutes && *c.duration_minutes <= 0) {
      violation(c.id, "duration", "duration must be positive");
    }
    for (const CastChange& cc : c.cast_changes) {
      check_ref(c.id, cc.agent_id, {EntityKind::person, EntityKind::group}, "cast_change");
      if (!roles_.find(cc.role)) {
        violation(c.id, "role-vocabulary", "role term not in vocabulary: " + cc.role);
      }
    }
  }

  void check(const Person& p) {
    if (p.name.empty()) violation(p.id, "name", "person has an empty name");
  }
  void check(const Place& p) {
    if (p.name.empty()) violation(p.id, "name", "place has an empty name");
  }
  void check(const Group& g) {
    if (g.name.empty()) violation(g.id, "name", "group has an empty name");
  }
  void check(const RefItem& r) {
    if (r.name.empty()) violation(r.id, "name", "referenced item has an empty name");
  }

  void check_timespan(const std::string& id, const Timespan& ts) {
    for (const auto& d : {ts.begin, ts.end}) {
      if (d && !is_iso_date(*d)) violation(id, "date", "not an ISO calendar date: " + *d);
    }
    if (ts.begin && ts.end && is_iso_date(*ts.begin) && is_iso_date(*ts.end) &&
        *ts.begin > *ts.end) {
      violation(id, "timespan", "timespan start after end");
    }
  }

  void coverage_warnings() {
    std::set<std::string> realized, shown;
    for (const auto& [_, entity] : graph_.entities()) {
      if (const auto* b = std::get_if<Production>(&entity)) realized.insert(b->realizes_id);
      if (const auto* c = std::get_if<ShowEvent>(&entity)) shown.insert(c->part_of_id);
    }
    for (const auto& [id, entity] : graph_.entities()) {
      if (std::holds_alternative<WorkConcept>(entity) && !realized.count(id)) {
        warning(id, "partial-data", "work concept has no production yet");
      }
      if (std::holds_alternative<Production>(entity) && !shown.count(id)) {
        warning(id, "partial-data", "production has no shows yet");
      }
    }
  }

  const ProductionGraph& graph_;
  const Vocabulary& roles_;
  const Vocabulary& aat_;
  ValidationResult result_;
};

}  // namespace

ValidationResult ProductionGraph::validate(const Vocabulary& roles, const Vocabulary& aat) const {
  return Validator(*this, roles, aat).run();
}

IriMinter::IriMinter(std::string base_iri) : base_(std::move(base_iri)) {
  if (base_.empty()) throw InvalidInputError("base IRI must not be empty");
  if (base_.back() != '/') base_.push_back('/');
}

std::string IriMinter::mint(EntityKind kind, const std::string& name) {
  std::string key = std::string(tier_dir(kind)) + "|" + name;
  if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
  std::string stem = base_ + tier_dir(kind) + "/" + text::slugify(name);
  std::string iri = stem;
  int n = 2;
  while (by_iri_.count(iri)) iri = stem + "-" + std::to_string(n++);
  by_name_[key] = iri;
  by_iri_[iri] = key;
  return iri;
}

}  // namespace showprog::ontology
