#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace showprog::text {

// UTF-8 <-> code points. Invalid byte sequences decode to U+FFFD so every
// function stays total on arbitrary input.
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(std::u32string_view s);

bool is_letter(char32_t c);
bool is_upper(char32_t c);
bool is_digit(char32_t c);
bool is_punct(char32_t c);

// Lowercase fold covering ASCII, Latin-1 Supplement and Latin Extended-A
// (enough for the French-dominant corpus).
char32_t fold_char(char32_t c);
std::string fold_case(std::string_view s);

std::string trim(std::string_view s);
std::vector<std::string> split_lines(std::string_view s);
std::vector<std::string> split_whitespace(std::string_view s);

// Strips punctuation from both ends of a token, leaving interior
// characters (apostrophes in names, hyphens) alone.
std::string strip_edge_punct(std::string_view token);

// ASCII slug for IRI paths: accents folded, punctuation collapsed to '-'.
std::string slugify(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
std::string replace_all(std::string s, std::string_view from, std::string_view to);

}  // namespace showprog::text
