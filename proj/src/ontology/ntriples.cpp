#include "showprog/ontology/ntriples.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "showprog/support/errors.hpp"

namespace showprog::ontology {

namespace {

constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr const char* kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
constexpr const char* kXsdDate = "http://www.w3.org/2001/XMLSchema#date";
constexpr const char* kXsdGYear = "http://www.w3.org/2001/XMLSchema#gYear";
constexpr const char* kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
constexpr const char* kCrm = "http://www.cidoc-crm.org/cidoc-crm/";

const char* crm_class(EntityKind kind) {
  switch (kind) {
    case EntityKind::work: return "E89_Propositional_Object";
    case EntityKind::production: return "E7_Activity";
    case EntityKind::show: return "E7_Activity";
    case EntityKind::person: return "E21_Person";
    case EntityKind::place: return "E53_Place";
    case EntityKind::group: return "E74_Group";
    case EntityKind::text_item: return "E33_Linguistic_Object";
    case EntityKind::object_item: return "E22_Human-Made_Object";
  }
  return "E1_CRM_Entity";
}

class TripleWriter {
 public:
  TripleWriter(const ProductionGraph& graph, const Vocabulary& roles, const Vocabulary& aat,
               std::string ns)
      : graph_(graph), roles_(roles), aat_(aat), ns_(std::move(ns)) {}

  std::string run() {
    for (const auto& [id, entity] : graph_.entities()) {
      std::visit([&](const auto& e) { emit(e); }, entity);
    }
    std::sort(lines_.begin(), lines_.end());
    std::ostringstream out;
    for (const std::string& line : lines_) out << line << '\n';
    return out.str();
  }

 private:
  std::string pred(const std::string& local) const { return ns_ + "ns/" + local; }

  void triple_iri(const std::string& s, const std::string& p, const std::string& o) {
    lines_.push_back("<" + s + "> <" + p + "> <" + o + "> .");
  }
  void triple_lit(const std::string& s, const std::string& p, const std::string& value,
                  const std::string& lang = "", const std::string& datatype = "") {
    std::string object = "\"" + escape_ntriples_literal(value) + "\"";
    if (!lang.empty()) object += "@" + lang;
    if (!datatype.empty()) object += "^^<" + datatype + ">";
    lines_.push_back("<" + s + "> <" + p + "> " + object + " .");
  }

  void type_of(const std::string& id, EntityKind kind) {
    triple_iri(id, kRdfType, std::string(kCrm) + crm_class(kind));
  }

  std::string role_iri(const std::string& term_id) const {
    const VocabTerm* term = roles_.find(term_id);
    return term ? term->iri : term_id;
  }

  void emit(const WorkConcept& a) {
    type_of(a.id, EntityKind::work);
    triple_lit(a.id, kRdfsLabel, a.title.text, a.title.lang);
    if (a.director_id) triple_iri(a.id, pred("director"), *a.director_id);
    if (a.year) triple_lit(a.id, pred("year"), std::to_string(*a.year), "", kXsdGYear);
    for (const InfluenceRef& inf : a.influences) {
      triple_iri(a.id, pred("influence/" + inf.relation), inf.target_id);
    }
  }

  void emit(const Production& b) {
    type_of(b.id, EntityKind::production);
    triple_lit(b.id, kRdfsLabel, b.title.text, b.title.lang);
    triple_iri(b.id, pred("realizes"), b.realizes_id);
    const VocabTerm* cls = aat_.find(b.classification);
    if (cls) triple_iri(b.id, pred("classification"), cls->iri);
    if (b.venue_id) triple_iri(b.id, pred("venue"), *b.venue_id);
    if (b.timespan.begin) triple_lit(b.id, pred("begin"), *b.timespan.begin, "", kXsdDate);
    if (b.timespan.end) triple_lit(b.id, pred("end"), *b.timespan.end, "", kXsdDate);
    for (const RoleAssignment& ra : b.cast) {
      triple_iri(b.id, pred("role/") + ra.role, ra.agent_id);
    }
    for (const std::string& funder : b.funder_ids) {
      triple_iri(b.id, pred("funder"), funder);
    }
  }

  void emit(const ShowEvent& c) {
    type_of(c.id, EntityKind::show);
    triple_iri(c.id, pred("partOf"), c.part_of_id);
    if (c.date) triple_lit(c.id, pred("date"), *c.date, "", kXsdDate);
    if (c.time) triple_lit(c.id, pred("time"), *c.time);
    if (c.duration_minutes) {
      triple_lit(c.id, pred("durationMinutes"), std::to_string(*c.duration_minutes), "", kXsdInteger);
    }
    for (const CastChange& cc : c.cast_changes) {
      triple_iri(c.id, pred((cc.removed ? "roleRemoved/" : "roleAdded/")) + cc.role, cc.agent_id);
    }
    if (c.notes) triple_lit(c.id, pred("note"), *c.notes);
  }

  void emit(const Person& p) {
    type_of(p.id, EntityKind::person);
    triple_lit(p.id, kRdfsLabel, p.name);
  }
  void emit(const Place& p) {
    type_of(p.id, EntityKind::place);
    triple_lit(p.id, kRdfsLabel, p.name);
  }
  void emit(const Group& g) {
    type_of(g.id, EntityKind::group);
    triple_lit(g.id, kRdfsLabel, g.name);
  }
  void emit(const RefItem& r) {
    type_of(r.id, r.is_text ? EntityKind::text_item : EntityKind::object_item);
    triple_lit(r.id, kRdfsLabel, r.name);
  }

  const ProductionGraph& graph_;
  const Vocabulary& roles_;
  const Vocabulary& aat_;
  std::string ns_;
  std::vector<std::string> lines_;
};

}  // namespace

std::string escape_ntriples_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string to_ntriples(const ProductionGraph& graph, const Vocabulary& roles,
                        const Vocabulary& aat, const std::string& ns_base) {
  ValidationResult check = graph.validate(roles, aat);
  if (!check.ok()) {
    throw InvalidInputError("refusing to serialize an invalid graph (" +
                            std::to_string(check.violations.size()) + " violations)");
  }
  std::string ns = ns_base;
  if (ns.empty()) throw InvalidInputError("namespace base must not be empty");
  if (ns.back() != '/') ns.push_back('/');
  return TripleWriter(graph, roles, aat, ns).run();
}

}  // namespace showprog::ontology
