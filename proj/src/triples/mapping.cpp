#include "showprog/triples/mapping.hpp"

#include <array>
#include <cstdio>

#include "showprog/support/errors.hpp"
#include "showprog/support/text.hpp"
#include "showprog/triples/reward.hpp"

namespace showprog::triples {

namespace {

constexpr std::array<std::pair<const char*, int>, 14> kFrenchMonths = {{
    {"janvier", 1}, {"fevrier", 2}, {"mars", 3}, {"avril", 4}, {"mai", 5}, {"juin", 6},
    {"juillet", 7}, {"aout", 8}, {"septembre", 9}, {"octobre", 10}, {"novembre", 11},
    {"decembre", 12}, {"février", 2}, {"décembre", 12},
}};

std::string strip_accents_fold(const std::string& s) {
  // slugify folds accents; months contain no separators so this is safe
  return text::slugify(s);
}

}  // namespace

std::optional<std::string> parse_french_date(const std::string& value) {
  std::vector<std::string> parts = text::split_whitespace(text::trim(value));
  if (parts.size() != 3) return std::nullopt;

  std::string day_str = parts[0];
  if (text::fold_case(day_str) == "1er") day_str = "1";
  int day = 0;
  for (char c : day_str) {
    if (c < '0' || c > '9') return std::nullopt;
    day = day * 10 + (c - '0');
  }
  if (day < 1 || day > 31) return std::nullopt;

  int month = 0;
  std::string month_fold = strip_accents_fold(parts[1]);
  for (const auto& [name, num] : kFrenchMonths) {
    if (month_fold == strip_accents_fold(name)) {
      month = num;
      break;
    }
  }
  if (month == 0) return std::nullopt;

  if (parts[2].size() != 4) return std::nullopt;
  int year = 0;
  for (char c : parts[2]) {
    if (c < '0' || c > '9') return std::nullopt;
    year = year * 10 + (c - '0');
  }

  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  std::string iso = buf;
  if (!ontology::is_iso_date(iso)) return std::nullopt;
  return iso;
}

MappedEntities triples_to_entities(const Draft& draft, const PropertyCatalog& catalog,
                                   ontology::IriMinter& minter) {
  RewardScore gate = formal_reward(draft, catalog);
  if (!gate.formal_pass) {
    std::string msg = "draft is gated by the formal reward:";
    for (const std::string& v : gate.violations) msg += " " + v;
    throw InvalidInputError(msg);
  }

  MappedEntities out;
  using ontology::EntityKind;

  ontology::LangString title{draft.subject, "fr"};
  std::vector<std::string> author_names;
  std::vector<std::pair<std::string, std::string>> cast_roles;  // (agent name, role term)
  std::vector<std::string> funder_names;
  std::optional<std::string> raw_date;

  for (const Triple& t : draft.triples) {
    const CatalogEntry* entry = catalog.find(t.property);
    const std::string& binding = entry->binding;
    if (binding == "work.title") {
      title.text = t.object.text;
      if (t.object.language && !t.object.language->empty()) title.lang = *t.object.language;
    } else if (binding == "work.influence:person") {
      author_names.push_back(t.object.text);
    } else if (text::starts_with(binding, "production.role:")) {
      cast_roles.emplace_back(t.object.text, binding.substr(std::string("production.role:").size()));
    } else if (binding == "production.funder") {
      funder_names.push_back(t.object.text);
    } else if (binding == "show.date") {
      raw_date = t.object.text;
    } else if (binding == "note" || binding == "aside") {
      out.notes.push_back({binding, draft.subject, t.property, t.object.text});
    } else {
      out.warnings.push_back("unknown binding '" + binding + "' for property " + t.property);
      out.notes.push_back({"aside", draft.subject, t.property, t.object.text});
    }
  }

  ontology::WorkConcept work;
  work.id = minter.mint(EntityKind::work, title.text);
  work.title = title;

  for (const std::string& name : author_names) {
    ontology::Person person{minter.mint(EntityKind::person, name), name};
    work.influences.push_back({person.id, "person"});
    out.persons.push_back(std::move(person));
  }

  std::optional<std::string> iso_date;
  if (raw_date) {
    iso_date = parse_french_date(*raw_date);
    if (iso_date) {
      work.year = std::stoi(iso_date->substr(0, 4));
    } else if (ontology::is_iso_date(*raw_date)) {
      iso_date = raw_date;
      work.year = std::stoi(raw_date->substr(0, 4));
    } else {
      out.warnings.push_back("unparseable date kept verbatim: " + *raw_date);
      out.notes.push_back({"aside", draft.subject, "date of first performance", *raw_date});
    }
  }

  const bool need_production = !cast_roles.empty() || !funder_names.empty() || iso_date.has_value();
  if (need_production) {
    ontology::Production production;
    production.id = minter.mint(EntityKind::production, title.text);
    production.realizes_id = work.id;
    production.title = title;
    for (const auto& [agent_name, role] : cast_roles) {
      ontology::Person person{minter.mint(EntityKind::person, agent_name), agent_name};
      production.cast.push_back({person.id, role});
      if (role == "director") work.director_id = person.id;
      out.persons.push_back(std::move(person));
    }
    for (const std::string& name : funder_names) {
      ontology::Group group{minter.mint(EntityKind::group, name), name};
      production.funder_ids.push_back(group.id);
      out.groups.push_back(std::move(group));
    }
    if (iso_date) {
      ontology::ShowEvent show;
      show.id = minter.mint(EntityKind::show, title.text + " " + *iso_date);
      show.part_of_id = production.id;
      show.date = iso_date;
      production.timespan.begin = iso_date;
      production.timespan.end = iso_date;
      out.show = std::move(show);
    }
    out.production = std::move(production);
  }

  out.work = std::move(work);
  return out;
}

void merge_into(ontology::ProductionGraph& graph, const MappedEntities& fragments) {
  auto add_if_new = [&graph](const ontology::Entity& e) {
    if (!graph.has(ontology::id_of(e))) graph.add_entity(e);
  };
  for (const auto& p : fragments.persons) add_if_new(p);
  for (const auto& p : fragments.places) add_if_new(p);
  for (const auto& g : fragments.groups) add_if_new(g);
  if (fragments.work) add_if_new(*fragments.work);
  if (fragments.production) add_if_new(*fragments.production);
  if (fragments.show) add_if_new(*fragments.show);
}

}  // namespace showprog::triples
