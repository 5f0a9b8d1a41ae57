#pragma once

#include <string>
#include <vector>

namespace showprog::evaluation {

// Minimum edit distance (insert/delete/substitute, unit costs) over code
// points or over token sequences.
std::size_t edit_distance(const std::u32string& a, const std::u32string& b);
std::size_t edit_distance_tokens(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b);

// 1 - d(a,b) / max(|a|,|b|) over code points; 1.0 when both are empty.
double levenshtein_ratio(const std::string& a, const std::string& b);

// (S+D+I)/N over word tokens. An empty reference scores as the hypothesis
// token count so the value stays finite and monotone.
double wer(const std::string& reference, const std::string& hypothesis);

// Same, over code points.
double cer(const std::string& reference, const std::string& hypothesis);

// |A∩B| / |A∪B| over word n-gram sets (n = 1 or 2), case-folded;
// 1.0 when both sets are empty.
double jaccard(const std::string& reference, const std::string& hypothesis, int n);

}  // namespace showprog::evaluation
