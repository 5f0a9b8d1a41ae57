#include "showprog/ontology/jsonld.hpp"

#include <sstream>

#include "showprog/support/errors.hpp"

#include "json.hpp"

namespace showprog::ontology {

using json = nlohmann::ordered_json;

namespace {

// Marker type id (under the graph's namespace) used on cast-change parts
// that remove someone from the cast.
constexpr const char* kRemovalTypeLabel = "cast removal";

json name_node(const LangString& name) {
  json n;
  n["type"] = "Name";
  n["content"] = name.text;
  if (!name.lang.empty()) {
    json lang;
    lang["type"] = "Language";
    lang["_label"] = name.lang;
    n["language"] = json::array({lang});
  }
  return n;
}

json ref_node(const std::string& id, const char* type, const std::string& label = "") {
  json n;
  n["id"] = id;
  n["type"] = type;
  if (!label.empty()) n["_label"] = label;
  return n;
}

json type_node(const VocabTerm& term) {
  json n;
  n["id"] = term.iri;
  n["type"] = "Type";
  n["_label"] = term.label;
  return n;
}

json timespan_node(const Timespan& ts) {
  json n;
  n["type"] = "TimeSpan";
  if (ts.begin) n["begin_of_the_begin"] = *ts.begin;
  if (ts.end) n["end_of_the_end"] = *ts.end;
  return n;
}

const char* la_type(EntityKind kind) {
  switch (kind) {
    case EntityKind::work: return "PropositionalObject";
    case EntityKind::production: return "Activity";
    case EntityKind::show: return "Activity";
    case EntityKind::person: return "Person";
    case EntityKind::place: return "Place";
    case EntityKind::group: return "Group";
    case EntityKind::text_item: return "LinguisticObject";
    case EntityKind::object_item: return "HumanMadeObject";
  }
  return "Activity";
}

const char* influence_type(const std::string& relation) {
  if (relation == "person") return "Person";
  if (relation == "group") return "Group";
  if (relation == "text") return "LinguisticObject";
  return "HumanMadeObject";
}

std::string relation_from_type(const std::string& type) {
  if (type == "Person") return "person";
  if (type == "Group") return "group";
  if (type == "LinguisticObject") return "text";
  if (type == "HumanMadeObject") return "object";
  throw UnsupportedPatternError("unsupported influence target class: " + type);
}

std::string label_of(const ProductionGraph& graph, const std::string& id) {
  const Entity* e = graph.find(id);
  if (!e) return "";
  if (const auto* p = std::get_if<Person>(e)) return p->name;
  if (const auto* p = std::get_if<Place>(e)) return p->name;
  if (const auto* g = std::get_if<Group>(e)) return g->name;
  if (const auto* r = std::get_if<RefItem>(e)) return r->name;
  if (const auto* a = std::get_if<WorkConcept>(e)) return a->title.text;
  if (const auto* b = std::get_if<Production>(e)) return b->title.text;
  return "";
}

const char* agent_type(const ProductionGraph& graph, const std::string& id) {
  const Entity* e = graph.find(id);
  if (e && std::holds_alternative<Group>(*e)) return "Group";
  return "Person";
}

json role_part(const ProductionGraph& graph, const Vocabulary& roles, const std::string& agent_id,
               const std::string& role, bool removed = false) {
  json part;
  part["type"] = "Activity";
  json classes = json::array();
  const VocabTerm* term = roles.find(role);
  if (term) {
    classes.push_back(type_node(*term));
  } else {
    // unknown role terms still serialize (validation reports them)
    json t;
    t["id"] = role;
    t["type"] = "Type";
    t["_label"] = role;
    classes.push_back(t);
  }
  if (removed) {
    json t;
    t["type"] = "Type";
    t["_label"] = kRemovalTypeLabel;
    classes.push_back(t);
  }
  part["classified_as"] = classes;
  part["carried_out_by"] =
      json::array({ref_node(agent_id, agent_type(graph, agent_id), label_of(graph, agent_id))});
  return part;
}

json work_doc(const ProductionGraph& graph, const WorkConcept& a) {
  json j;
  j["@context"] = kLinkedArtContext;
  j["id"] = a.id;
  j["type"] = "PropositionalObject";
  j["_label"] = a.title.text;
  j["identified_by"] = json::array({name_node(a.title)});

  json creation;
  creation["type"] = "Creation";
  if (a.director_id) {
    creation["carried_out_by"] = json::array(
        {ref_node(*a.director_id, "Person", label_of(graph, *a.director_id))});
  }
  if (a.year) {
    Timespan ts;
    ts.begin = std::to_string(*a.year) + "-01-01";
    ts.end = std::to_string(*a.year) + "-12-31";
    creation["timespan"] = timespan_node(ts);
  }
  if (!a.influences.empty()) {
    json infl = json::array();
    for (const InfluenceRef& ref : a.influences) {
      infl.push_back(
          ref_node(ref.target_id, influence_type(ref.relation), label_of(graph, ref.target_id)));
    }
    creation["influenced_by"] = infl;
  }
  if (creation.size() > 1) j["created_by"] = creation;
  return j;
}

json production_doc(const ProductionGraph& graph, const Vocabulary& roles, const Vocabulary& aat,
                    const Production& b) {
  json j;
  j["@context"] = kLinkedArtContext;
  j["id"] = b.id;
  j["type"] = "Activity";
  j["_label"] = b.title.text;
  const VocabTerm* cls = aat.find(b.classification);
  if (cls) j["classified_as"] = json::array({type_node(*cls)});
  j["identified_by"] = json::array({name_node(b.title)});
  j["motivated_by"] = json::array({ref_node(b.realizes_id, "PropositionalObject")});
  if (b.venue_id) {
    j["took_place_at"] =
        json::array({ref_node(*b.venue_id, "Place", label_of(graph, *b.venue_id))});
  }
  if (b.timespan.begin || b.timespan.end) j["timespan"] = timespan_node(b.timespan);

  json parts = json::array();
  for (const RoleAssignment& ra : b.cast) parts.push_back(role_part(graph, roles, ra.agent_id, ra.role));
  for (const std::string& funder : b.funder_ids) parts.push_back(role_part(graph, roles, funder, "funder"));
  if (!parts.empty()) j["part"] = parts;
  return j;
}

json show_doc(const ProductionGraph& graph, const Vocabulary& roles, const ShowEvent& c) {
  json j;
  j["@context"] = kLinkedArtContext;
  j["id"] = c.id;
  j["type"] = "Activity";
  j["part_of"] = json::array({ref_node(c.part_of_id, "Activity")});
  if (c.date) {
    Timespan ts;
    if (c.time) {
      ts.begin = *c.date + "T" + *c.time + ":00";
      ts.end = ts.begin;
      json n;
      n["type"] = "TimeSpan";
      n["begin_of_the_begin"] = *ts.begin;
      n["end_of_the_end"] = *ts.end;
      j["timespan"] = n;
    } else {
      ts.begin = c.date;
      ts.end = c.date;
      j["timespan"] = timespan_node(ts);
    }
  }
  if (c.duration_minutes) {
    json d;
    d["type"] = "Dimension";
    d["value"] = *c.duration_minutes;
    json unit;
    unit["type"] = "MeasurementUnit";
    unit["_label"] = "minutes";
    d["unit"] = unit;
    j["duration"] = d;
  }
  json parts = json::array();
  for (const CastChange& cc : c.cast_changes) {
    parts.push_back(role_part(graph, roles, cc.agent_id, cc.role, cc.removed));
  }
  if (!parts.empty()) j["part"] = parts;
  if (c.notes) {
    json note;
    note["type"] = "LinguisticObject";
    note["content"] = *c.notes;
    j["referred_to_by"] = json::array({note});
  }
  return j;
}

json simple_doc(const std::string& id, const char* type, const std::string& name) {
  json j;
  j["@context"] = kLinkedArtContext;
  j["id"] = id;
  j["type"] = type;
  j["_label"] = name;
  LangString n{name, ""};
  j["identified_by"] = json::array({name_node(n)});
  return j;
}

std::string slug_of_iri(const std::string& iri) {
  std::size_t slash = iri.find_last_of('/');
  std::string slug = slash == std::string::npos ? iri : iri.substr(slash + 1);
  return slug.empty() ? "entity" : slug;
}

LangString parse_name(const json& j, const std::string& fallback_label) {
  LangString name;
  name.text = fallback_label;
  name.lang.clear();
  if (j.contains("identified_by") && j["identified_by"].is_array() &&
      !j["identified_by"].empty()) {
    const json& n = j["identified_by"][0];
    name.text = n.value("content", fallback_label);
    if (n.contains("language") && n["language"].is_array() && !n["language"].empty()) {
      name.lang = n["language"][0].value("_label", "");
    }
  }
  return name;
}

Timespan parse_timespan(const json& j) {
  Timespan ts;
  if (!j.contains("timespan")) return ts;
  const json& t = j["timespan"];
  if (t.contains("begin_of_the_begin")) ts.begin = t["begin_of_the_begin"].get<std::string>();
  if (t.contains("end_of_the_end")) ts.end = t["end_of_the_end"].get<std::string>();
  return ts;
}

std::string role_term_from_part(const json& part, const Vocabulary& roles, bool* removed) {
  *removed = false;
  std::string role;
  for (const json& cls : part.value("classified_as", json::array())) {
    if (cls.value("_label", "") == kRemovalTypeLabel) {
      *removed = true;
      continue;
    }
    std::string iri = cls.value("id", "");
    const VocabTerm* term = roles.find_by_iri(iri);
    role = term ? term->id : iri;
  }
  return role;
}

}  // namespace

std::string entity_relpath(const Entity& entity) {
  return std::string(tier_dir(kind_of(entity))) + "/" + slug_of_iri(id_of(entity)) + ".json";
}

std::map<std::string, std::string> to_jsonld(const ProductionGraph& graph, const Vocabulary& roles,
                                             const Vocabulary& aat) {
  ValidationResult check = graph.validate(roles, aat);
  if (!check.ok()) {
    std::ostringstream msg;
    msg << "graph has " << check.violations.size() << " violation(s):";
    for (const Violation& v : check.violations) {
      msg << "\n  " << v.entity_id << " [" << v.rule << "] " << v.message;
    }
    throw InvalidInputError(msg.str());
  }

  std::map<std::string, std::string> docs;
  for (const auto& [id, entity] : graph.entities()) {
    json j;
    if (const auto* a = std::get_if<WorkConcept>(&entity)) {
      j = work_doc(graph, *a);
    } else if (const auto* b = std::get_if<Production>(&entity)) {
      j = production_doc(graph, roles, aat, *b);
    } else if (const auto* c = std::get_if<ShowEvent>(&entity)) {
      j = show_doc(graph, roles, *c);
    } else if (const auto* p = std::get_if<Person>(&entity)) {
      j = simple_doc(p->id, "Person", p->name);
    } else if (const auto* p = std::get_if<Place>(&entity)) {
      j = simple_doc(p->id, "Place", p->name);
    } else if (const auto* g = std::get_if<Group>(&entity)) {
      j = simple_doc(g->id, "Group", g->name);
    } else if (const auto* r = std::get_if<RefItem>(&entity)) {
      j = simple_doc(r->id, r->is_text ? "LinguisticObject" : "HumanMadeObject", r->name);
    }
    docs[entity_relpath(entity)] = j.dump(2) + "\n";
  }
  return docs;
}

Entity entity_from_jsonld(const std::string& document, const Vocabulary& roles) {
  json j;
  try {
    j = json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON-LD parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j.contains("id")) {
    throw ParseError("JSON-LD document must be an object with id and type");
  }
  const std::string type = j["type"].get<std::string>();
  const std::string id = j["id"].get<std::string>();

  if (type == "PropositionalObject") {
    WorkConcept a;
    a.id = id;
    a.title = parse_name(j, j.value("_label", ""));
    if (j.contains("created_by")) {
      const json& creation = j["created_by"];
      if (creation.contains("carried_out_by") && !creation["carried_out_by"].empty()) {
        a.director_id = creation["carried_out_by"][0].value("id", "");
      }
      if (creation.contains("timespan") && creation["timespan"].contains("begin_of_the_begin")) {
        std::string begin = creation["timespan"]["begin_of_the_begin"].get<std::string>();
        if (begin.size() >= 4) a.year = std::stoi(begin.substr(0, 4));
      }
      for (const json& inf : creation.value("influenced_by", json::array())) {
        InfluenceRef ref;
        ref.target_id = inf.value("id", "");
        ref.relation = relation_from_type(inf.value("type", ""));
        a.influences.push_back(std::move(ref));
      }
    }
    return a;
  }

  if (type == "Activity") {
    if (j.contains("part_of")) {
      ShowEvent c;
      c.id = id;
      c.part_of_id = j["part_of"][0].value("id", "");
      Timespan ts = parse_timespan(j);
      if (ts.begin) {
        std::string begin = *ts.begin;
        std::size_t t = begin.find('T');
        if (t != std::string::npos) {
          c.date = begin.substr(0, t);
          c.time = begin.substr(t + 1, 5);
        } else {
          c.date = begin;
        }
      }
      if (j.contains("duration")) c.duration_minutes = j["duration"].value("value", 0);
      for (const json& part : j.value("part", json::array())) {
        CastChange cc;
        cc.role = role_term_from_part(part, roles, &cc.removed);
        if (part.contains("carried_out_by") && !part["carried_out_by"].empty()) {
          cc.agent_id = part["carried_out_by"][0].value("id", "");
        }
        c.cast_changes.push_back(std::move(cc));
      }
      if (j.contains("referred_to_by") && !j["referred_to_by"].empty()) {
        c.notes = j["referred_to_by"][0].value("content", "");
      }
      return c;
    }

    Production b;
    b.id = id;
    b.title = parse_name(j, j.value("_label", ""));
    if (j.contains("motivated_by") && !j["motivated_by"].empty()) {
      b.realizes_id = j["motivated_by"][0].value("id", "");
    }
    if (j.contains("classified_as") && !j["classified_as"].empty()) {
      std::string iri = j["classified_as"][0].value("id", "");
      std::size_t slash = iri.find_last_of('/');
      b.classification = slash == std::string::npos ? iri : iri.substr(slash + 1);
    }
    if (j.contains("took_place_at") && !j["took_place_at"].empty()) {
      b.venue_id = j["took_place_at"][0].value("id", "");
    }
    b.timespan = parse_timespan(j);
    for (const json& part : j.value("part", json::array())) {
      bool removed = false;
      std::string role = role_term_from_part(part, roles, &removed);
      std::string agent;
      if (part.contains("carried_out_by") && !part["carried_out_by"].empty()) {
        agent = part["carried_out_by"][0].value("id", "");
      }
      if (role == "funder") {
        b.funder_ids.push_back(agent);
      } else {
        b.cast.push_back({agent, role});
      }
    }
    return b;
  }

  const std::string label = j.value("_label", "");
  if (type == "Person") return Person{id, parse_name(j, label).text};
  if (type == "Place") return Place{id, parse_name(j, label).text};
  if (type == "Group") return Group{id, parse_name(j, label).text};
  if (type == "LinguisticObject") return RefItem{id, parse_name(j, label).text, true};
  if (type == "HumanMadeObject") return RefItem{id, parse_name(j, label).text, false};

  throw UnsupportedPatternError("unsupported top-level class: " + type);
}

ProductionGraph graph_from_jsonld(const std::vector<std::string>& documents,
                                  const Vocabulary& roles) {
  ProductionGraph graph;
  for (const std::string& doc : documents) {
    graph.add_entity(entity_from_jsonld(doc, roles));
  }
  return graph;
}

}  // namespace showprog::ontology
