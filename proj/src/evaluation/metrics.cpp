#include "showprog/evaluation/metrics.hpp"

#include <algorithm>
#include <set>

#include "showprog/evaluation/tokenize.hpp"
#include "showprog/support/errors.hpp"
#include "showprog/support/text.hpp"

namespace showprog::evaluation {

namespace {

// Two-row DP, generic over element type.
template <typename Seq>
std::size_t edit_distance_impl(const Seq& a, const Seq& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

std::size_t edit_distance(const std::u32string& a, const std::u32string& b) {
  return edit_distance_impl(a, b);
}

std::size_t edit_distance_tokens(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  return edit_distance_impl(a, b);
}

double levenshtein_ratio(const std::string& a, const std::string& b) {
  std::u32string ua = text::utf8_decode(a);
  std::u32string ub = text::utf8_decode(b);
  std::size_t longest = std::max(ua.size(), ub.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(ua, ub)) / static_cast<double>(longest);
}

double wer(const std::string& reference, const std::string& hypothesis) {
  std::vector<std::string> ref = word_tokens(reference);
  std::vector<std::string> hyp = word_tokens(hypothesis);
  if (ref.empty()) return static_cast<double>(hyp.size());
  return static_cast<double>(edit_distance_tokens(ref, hyp)) / static_cast<double>(ref.size());
}

double cer(const std::string& reference, const std::string& hypothesis) {
  std::u32string ref = text::utf8_decode(reference);
  std::u32string hyp = text::utf8_decode(hypothesis);
  if (ref.empty()) return static_cast<double>(hyp.size());
  return static_cast<double>(edit_distance(ref, hyp)) / static_cast<double>(ref.size());
}

double jaccard(const std::string& reference, const std::string& hypothesis, int n) {
  if (n != 1 && n != 2) throw InvalidInputError("jaccard supports n = 1 or 2");
  std::vector<std::string> ga = word_ngrams(reference, n, /*fold_case=*/true);
  std::vector<std::string> gb = word_ngrams(hypothesis, n, /*fold_case=*/true);
  std::set<std::string> a(ga.begin(), ga.end());
  std::set<std::string> b(gb.begin(), gb.end());
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const std::string& g : a) inter += b.count(g);
  std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace showprog::evaluation
