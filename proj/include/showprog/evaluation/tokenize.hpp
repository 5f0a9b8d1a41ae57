#pragma once

#include <string>
#include <vector>

namespace showprog::evaluation {

// Whitespace split with edge punctuation stripped. Case folding is applied
// only where noted (Jaccard, NER fuzzy matching) — never for WER/CER.
std::vector<std::string> word_tokens(const std::string& s, bool fold_case = false);

std::size_t word_count(const std::string& s);

// Word n-grams joined with a single space.
std::vector<std::string> word_ngrams(const std::string& s, int n, bool fold_case);

}  // namespace showprog::evaluation
