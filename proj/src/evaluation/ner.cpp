#include "showprog/evaluation/ner.hpp"

#include <algorithm>
#include <set>

#include "showprog/evaluation/metrics.hpp"
#include "showprog/evaluation/tokenize.hpp"
#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"
#include "showprog/support/text.hpp"

namespace showprog::evaluation {

EntityKind entity_kind_from_string(const std::string& s) {
  if (s == "person") return EntityKind::person;
  if (s == "place") return EntityKind::place;
  if (s == "org") return EntityKind::org;
  return EntityKind::other;
}

const char* to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::person: return "person";
    case EntityKind::place: return "place";
    case EntityKind::org: return "org";
    case EntityKind::other: return "other";
  }
  return "other";
}

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
  Gazetteer g;
  for (const std::string& raw : text::split_lines(fsutil::read_file(path))) {
    std::string line = text::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      g.add(line, EntityKind::other);
    } else {
      g.add(text::trim(line.substr(0, tab)),
            entity_kind_from_string(text::trim(line.substr(tab + 1))));
    }
  }
  return g;
}

void Gazetteer::add(const std::string& surface, EntityKind kind) {
  entries_[text::fold_case(surface)] = kind;
}

namespace {

const std::set<std::string> kConnectors = {"de", "du", "des", "la", "le", "les",
                                           "van", "von", "da", "di", "of", "the"};

bool capitalized(const std::string& token) {
  std::u32string cps = text::utf8_decode(token);
  if (cps.empty()) return false;
  if (text::is_upper(cps[0])) return true;
  // elided articles glued to a capital: l'Est, d'Avignon
  if (cps.size() >= 3 && (cps[0] == U'l' || cps[0] == U'd' || cps[0] == U'L' || cps[0] == U'D') &&
      (cps[1] == U'\'' || cps[1] == 0x2019)) {
    return text::is_upper(cps[2]);
  }
  return false;
}

bool connector(const std::string& token) {
  return kConnectors.count(text::fold_case(token)) > 0;
}

const std::set<std::string> kOrgCues = {"theatre", "théâtre", "festival", "compagnie",
                                        "ensemble", "opéra", "opera", "ballet"};

EntityKind guess_kind(const std::vector<std::string>& tokens) {
  for (const std::string& t : tokens) {
    if (kOrgCues.count(text::fold_case(t))) return EntityKind::org;
  }
  return tokens.size() >= 2 ? EntityKind::person : EntityKind::other;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

EntitySet extract_entities(const std::string& content, const Gazetteer* gazetteer) {
  EntitySet out;
  for (const std::string& line : text::split_lines(content)) {
    std::vector<std::string> tokens = word_tokens(line);
    std::vector<std::string> run;
    auto flush = [&]() {
      if (run.empty()) return;
      // drop trailing connectors picked up while scanning
      while (!run.empty() && connector(run.back())) run.pop_back();
      if (!run.empty() && !(run.size() == 1 && connector(run[0]))) {
        Entity e;
        e.surface = join(run);
        e.kind = guess_kind(run);
        if (gazetteer) {
          auto it = gazetteer->entries().find(text::fold_case(e.surface));
          if (it != gazetteer->entries().end()) e.kind = it->second;
        }
        out.push_back(std::move(e));
      }
      run.clear();
    };
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::string& tok = tokens[i];
      if (capitalized(tok) && !connector(tok)) {
        run.push_back(tok);
      } else if (!run.empty() && connector(tok) && i + 1 < tokens.size() &&
                 capitalized(tokens[i + 1])) {
        run.push_back(tok);
      } else {
        flush();
      }
    }
    flush();
  }
  // single capitalized stopwords were already excluded; drop one-letter runs
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Entity& e) {
                             return text::utf8_decode(e.surface).size() < 2;
                           }),
            out.end());
  return out;
}

PrfResult ner_prf(const EntitySet& reference, const EntitySet& hypothesis, double fuzzy_threshold) {
  if (fuzzy_threshold <= 0.0 || fuzzy_threshold > 1.0) {
    throw InvalidInputError("fuzzy threshold must be in (0, 1]");
  }
  PrfResult result;
  std::vector<char> ref_used(reference.size(), 0), hyp_used(hypothesis.size(), 0);
  std::vector<double> match_ratios;

  // pass 1: exact case-folded surfaces
  for (std::size_t r = 0; r < reference.size(); ++r) {
    std::string ref_fold = text::fold_case(reference[r].surface);
    for (std::size_t h = 0; h < hypothesis.size(); ++h) {
      if (hyp_used[h]) continue;
      if (text::fold_case(hypothesis[h].surface) == ref_fold) {
        ref_used[r] = 1;
        hyp_used[h] = 1;
        result.matches.emplace_back(reference[r].surface, hypothesis[h].surface);
        match_ratios.push_back(1.0);
        break;
      }
    }
  }

  // pass 2: fuzzy, best ratio first
  struct Cand {
    double ratio;
    std::size_t r, h;
  };
  std::vector<Cand> cands;
  for (std::size_t r = 0; r < reference.size(); ++r) {
    if (ref_used[r]) continue;
    for (std::size_t h = 0; h < hypothesis.size(); ++h) {
      if (hyp_used[h]) continue;
      double ratio = levenshtein_ratio(text::fold_case(reference[r].surface),
                                       text::fold_case(hypothesis[h].surface));
      if (ratio >= fuzzy_threshold) cands.push_back({ratio, r, h});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    if (a.r != b.r) return a.r < b.r;
    return a.h < b.h;
  });
  for (const Cand& c : cands) {
    if (ref_used[c.r] || hyp_used[c.h]) continue;
    ref_used[c.r] = 1;
    hyp_used[c.h] = 1;
    result.matches.emplace_back(reference[c.r].surface, hypothesis[c.h].surface);
    match_ratios.push_back(c.ratio);
  }

  const std::size_t matched = result.matches.size();
  result.precision = hypothesis.empty() ? (reference.empty() ? 1.0 : 0.0)
                                        : static_cast<double>(matched) / hypothesis.size();
  result.recall = reference.empty() ? 1.0 : static_cast<double>(matched) / reference.size();
  if (!match_ratios.empty()) {
    double sum = 0.0;
    for (double r : match_ratios) sum += r;
    result.mean_match_ratio = sum / static_cast<double>(match_ratios.size());
  }
  return result;
}

}  // namespace showprog::evaluation
