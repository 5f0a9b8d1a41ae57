#include "showprog/evaluation/tokenize.hpp"

#include "showprog/support/text.hpp"

namespace showprog::evaluation {

std::vector<std::string> word_tokens(const std::string& s, bool fold_case) {
  std::vector<std::string> out;
  for (const std::string& raw : text::split_whitespace(s)) {
    std::string token = text::strip_edge_punct(raw);
    if (token.empty()) continue;
    out.push_back(fold_case ? text::fold_case(token) : token);
  }
  return out;
}

std::size_t word_count(const std::string& s) { return word_tokens(s).size(); }

std::vector<std::string> word_ngrams(const std::string& s, int n, bool fold_case) {
  std::vector<std::string> tokens = word_tokens(s, fold_case);
  std::vector<std::string> out;
  if (n <= 0 || tokens.size() < static_cast<std::size_t>(n)) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (int k = 1; k < n; ++k) {
      gram += ' ';
      gram += tokens[i + static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(gram));
  }
  return out;
}

}  // namespace showprog::evaluation
