#pragma once

// Independent brute-force oracles for the metric and segmentation tests.
// These deliberately avoid the library's optimized implementations: full
// DP matrices, recursive edit-script enumeration, std::set arithmetic.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracles {

// Full-matrix edit distance (the library uses a two-row rolling variant).
template <typename Seq>
std::size_t edit_distance_matrix(const Seq& a, const Seq& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u)});
    }
  }
  return d[n][m];
}

// Exhaustive minimum over all edit scripts; exponential, for tiny inputs.
template <typename Seq>
std::size_t edit_distance_scripts(const Seq& a, const Seq& b, std::size_t i = 0,
                                  std::size_t j = 0) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  std::size_t best = edit_distance_scripts(a, b, i + 1, j) + 1;          // delete
  best = std::min(best, edit_distance_scripts(a, b, i, j + 1) + 1);      // insert
  std::size_t sub = edit_distance_scripts(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
  return std::min(best, sub);
}

inline double jaccard_sets(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::vector<std::string> inter, uni;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(uni));
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

inline int lower_median(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v[(v.size() - 1) / 2];
}

}  // namespace oracles
