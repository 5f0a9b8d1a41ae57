#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace showprog::evaluation {

enum class EntityKind { person, place, org, other };

struct Entity {
  std::string surface;  // normalized per tokenizer rules
  EntityKind kind = EntityKind::other;

  bool operator==(const Entity&) const = default;
};

// Multiset of entity mentions.
using EntitySet = std::vector<Entity>;

// Optional plain-text lexicon: one entity per line, "surface<TAB>kind" with
// kind in {person, place, org, other}; bare lines default to other.
class Gazetteer {
 public:
  static Gazetteer load(const std::filesystem::path& path);
  void add(const std::string& surface, EntityKind kind);
  const std::map<std::string, EntityKind>& entries() const { return entries_; }

 private:
  std::map<std::string, EntityKind> entries_;  // keyed by case-folded surface
};

// Built-in baseline: capitalized token runs (French connectors allowed
// between capitals) plus gazetteer hits. Entity extraction quality is
// pluggable; the matching math below is what this module owns.
EntitySet extract_entities(const std::string& text, const Gazetteer* gazetteer = nullptr);

struct PrfResult {
  double precision = 0.0;
  double recall = 0.0;
  std::vector<std::pair<std::string, std::string>> matches;  // (ref surface, hyp surface)
  double mean_match_ratio = 1.0;  // mean levenshtein_ratio over matched pairs
};

// One-to-one matching: exact (case-folded) surfaces first, then fuzzy pairs
// with levenshtein_ratio >= fuzzy_threshold, best ratio first. A threshold
// of 1.0 degenerates to exact matching.
PrfResult ner_prf(const EntitySet& reference, const EntitySet& hypothesis, double fuzzy_threshold);

EntityKind entity_kind_from_string(const std::string& s);
const char* to_string(EntityKind kind);

}  // namespace showprog::evaluation
