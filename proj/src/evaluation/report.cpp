#include "showprog/evaluation/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "showprog/evaluation/align.hpp"
#include "showprog/evaluation/metrics.hpp"
#include "showprog/evaluation/tokenize.hpp"
#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"

#include "json.hpp"

namespace showprog::evaluation {

namespace {

std::map<std::string, std::filesystem::path> collect_md(const std::filesystem::path& dir) {
  std::map<std::string, std::filesystem::path> out;
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".md") continue;
    std::string key = std::filesystem::relative(entry.path(), dir).generic_string();
    key = key.substr(0, key.size() - 3);  // drop ".md"
    out[key] = entry.path();
  }
  return out;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double stddev_of(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return std::sqrt(acc / static_cast<double>(values.size()));
}

const std::vector<std::pair<std::string, double PairScores::*>>& metric_fields() {
  static const std::vector<std::pair<std::string, double PairScores::*>> fields = {
      {"levenshtein_ratio", &PairScores::levenshtein_ratio},
      {"wer", &PairScores::wer},
      {"cer", &PairScores::cer},
      {"jaccard_words", &PairScores::jaccard_words},
      {"jaccard_bigrams", &PairScores::jaccard_bigrams},
      {"line_precision", &PairScores::line_precision},
      {"line_recall", &PairScores::line_recall},
      {"line_levenshtein", &PairScores::line_levenshtein},
      {"ner_precision", &PairScores::ner_precision},
      {"ner_recall", &PairScores::ner_recall},
      {"ner_levenshtein", &PairScores::ner_levenshtein},
  };
  return fields;
}

}  // namespace

FileMatchResult match_files(const std::filesystem::path& reference_dir,
                            const std::filesystem::path& hypothesis_dir) {
  auto refs = collect_md(reference_dir);
  auto hyps = collect_md(hypothesis_dir);

  FileMatchResult result;
  for (const auto& [key, ref_path] : refs) {
    auto it = hyps.find(key);
    if (it == hyps.end()) {
      result.unmatched_reference.push_back(key);
      continue;
    }
    EvalPair pair;
    pair.key = key;
    pair.reference = transcription::parse_markdown(fsutil::read_file(ref_path));
    pair.hypothesis = transcription::parse_markdown(fsutil::read_file(it->second));
    pair.word_count_weight =
        static_cast<double>(word_count(pair.reference.plain_text()));
    result.pairs.push_back(std::move(pair));
  }
  for (const auto& [key, _] : hyps) {
    if (refs.find(key) == refs.end()) result.unmatched_hypothesis.push_back(key);
  }
  return result;
}

const Aggregate& EvalReport::aggregate(const std::string& metric) const {
  for (const auto& [name, agg] : corpus) {
    if (name == metric) return agg;
  }
  throw InvalidInputError("unknown metric: " + metric);
}

EvalReport build_report(const std::vector<EvalPair>& pairs, const EvalConfig& config) {
  if (pairs.empty()) throw InvalidInputError("cannot build a report from zero pairs");

  EvalReport report;
  for (const EvalPair& pair : pairs) {
    PairScores s;
    s.key = pair.key;
    s.weight = pair.word_count_weight;

    const std::string ref_text = transcription::render_markdown(pair.reference);
    const std::string hyp_text = transcription::render_markdown(pair.hypothesis);
    s.levenshtein_ratio = levenshtein_ratio(ref_text, hyp_text);
    s.wer = wer(ref_text, hyp_text);
    s.cer = cer(ref_text, hyp_text);
    s.jaccard_words = jaccard(ref_text, hyp_text, 1);
    s.jaccard_bigrams = jaccard(ref_text, hyp_text, 2);

    AlignResult lines = align_lines(pair.reference, pair.hypothesis, config.line_match_threshold,
                                    config.optimal_line_assignment);
    s.line_precision = lines.precision;
    s.line_recall = lines.recall;
    if (!lines.matches.empty()) {
      double acc = 0.0;
      for (const LineMatch& m : lines.matches) acc += m.ratio;
      s.line_levenshtein = acc / static_cast<double>(lines.matches.size());
    }

    const Gazetteer* gaz = config.gazetteer ? &*config.gazetteer : nullptr;
    EntitySet ref_entities = extract_entities(pair.reference.plain_text(), gaz);
    EntitySet hyp_entities = extract_entities(pair.hypothesis.plain_text(), gaz);
    PrfResult prf = ner_prf(ref_entities, hyp_entities, config.ner_fuzzy_threshold);
    s.ner_precision = prf.precision;
    s.ner_recall = prf.recall;
    s.ner_levenshtein = prf.mean_match_ratio;

    report.pairs.push_back(std::move(s));
  }

  double weight_sum = 0.0;
  for (const PairScores& s : report.pairs) weight_sum += s.weight;

  for (const auto& [name, field] : metric_fields()) {
    Aggregate agg;
    std::vector<double> values;
    double weighted = 0.0;
    for (const PairScores& s : report.pairs) {
      values.push_back(s.*field);
      weighted += s.weight * (s.*field);
    }
    agg.weighted_mean = weight_sum > 0.0
                            ? weighted / weight_sum
                            : median_of(values);  // all-zero weights: fall back to plain stats
    agg.median = median_of(values);
    agg.stddev = stddev_of(values);
    report.corpus.emplace_back(name, agg);
  }
  return report;
}

std::string EvalReport::to_jsonl() const {
  std::ostringstream out;
  for (const PairScores& s : pairs) {
    nlohmann::ordered_json j;
    j["key"] = s.key;
    j["weight"] = s.weight;
    for (const auto& [name, field] : metric_fields()) j[name] = fmt4(s.*field);
    out << j.dump() << '\n';
  }
  nlohmann::ordered_json corpus_j;
  corpus_j["key"] = "__corpus__";
  for (const auto& [name, agg] : corpus) {
    corpus_j[name + ".weighted_mean"] = fmt4(agg.weighted_mean);
    corpus_j[name + ".median"] = fmt4(agg.median);
    corpus_j[name + ".stddev"] = fmt4(agg.stddev);
  }
  out << corpus_j.dump() << '\n';
  return out.str();
}

std::string EvalReport::to_markdown() const {
  std::ostringstream out;
  out << "# Transcription evaluation\n\n";
  out << "Pairs evaluated: " << pairs.size() << "\n\n";

  out << "## Word-count-weighted means\n\n";
  out << "| Corpus | Lev. full document | P/R decomp. | Lev. decomp. | P/R NER decomp. | Lev. NER decomp. |\n";
  out << "|---|---|---|---|---|---|\n";
  out << "| all | " << fmt4(aggregate("levenshtein_ratio").weighted_mean) << " | "
      << fmt4(aggregate("line_precision").weighted_mean) << "/"
      << fmt4(aggregate("line_recall").weighted_mean) << " | "
      << fmt4(aggregate("line_levenshtein").weighted_mean) << " | "
      << fmt4(aggregate("ner_precision").weighted_mean) << "/"
      << fmt4(aggregate("ner_recall").weighted_mean) << " | "
      << fmt4(aggregate("ner_levenshtein").weighted_mean) << " |\n\n";

  // Jaccard rows report distance (1 - similarity): divergence-style scores,
  // comparable with the error rates above them.
  out << "## Medians over pairs\n\n";
  out << "| Metric | Score | Standard deviation |\n";
  out << "|---|---|---|\n";
  out << "| Jaccard distance (words) | " << fmt4(1.0 - aggregate("jaccard_words").median) << " | "
      << fmt4(aggregate("jaccard_words").stddev) << " |\n";
  out << "| Jaccard distance (2-grams) | " << fmt4(1.0 - aggregate("jaccard_bigrams").median)
      << " | " << fmt4(aggregate("jaccard_bigrams").stddev) << " |\n";
  out << "| CER | " << fmt4(aggregate("cer").median) << " | " << fmt4(aggregate("cer").stddev)
      << " |\n";
  out << "| WER | " << fmt4(aggregate("wer").median) << " | " << fmt4(aggregate("wer").stddev)
      << " |\n";
  return out.str();
}

}  // namespace showprog::evaluation
