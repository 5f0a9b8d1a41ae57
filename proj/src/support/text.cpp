#include "showprog/support/text.hpp"

#include <algorithm>
#include <cctype>

namespace showprog::text {

std::u32string utf8_decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size() &&
               (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80) {
      cp = ((b0 & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
      len = 2;
      if (cp < 0x80) cp = 0xFFFD;
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size() &&
               (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80 &&
               (static_cast<unsigned char>(s[i + 2]) & 0xC0) == 0x80) {
      cp = ((b0 & 0x0Fu) << 12) | ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6) |
           (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
      len = 3;
      if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    } else if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size() &&
               (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80 &&
               (static_cast<unsigned char>(s[i + 2]) & 0xC0) == 0x80 &&
               (static_cast<unsigned char>(s[i + 3]) & 0xC0) == 0x80) {
      cp = ((b0 & 0x07u) << 18) | ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12) |
           ((static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6) |
           (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
      len = 4;
      if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool is_letter(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
  if (c >= 0xC0 && c <= 0xFF && c != 0xD7 && c != 0xF7) return true;
  if (c >= 0x100 && c <= 0x17F) return true;
  return false;
}

bool is_upper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return true;
  if (c >= 0x100 && c <= 0x17F) return fold_char(c) != c;
  return false;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_punct(char32_t c) {
  if (c < 0x80) {
    return std::ispunct(static_cast<int>(c)) != 0;
  }
  // Guillemets, inverted marks, general punctuation block (quotes, dashes,
  // ellipsis), plus the middle dot.
  if (c == 0xAB || c == 0xBB || c == 0xA1 || c == 0xBF || c == 0xB7) return true;
  if (c >= 0x2000 && c <= 0x206F) return true;
  return false;
}

char32_t fold_char(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  if (c >= 0x100 && c <= 0x17F) {
    if (c == 0x130) return U'i';  // dotted capital I
    if (c == 0x131) return c;     // dotless i is already lowercase
    if (c == 0x178) return 0xFF;  // Y diaeresis
    if (c == 0x17F) return U's';  // long s
    // In Latin Extended-A the even code point of each pair is the capital.
    if ((c & 1u) == 0) return c + 1;
  }
  return c;
}

std::string fold_case(std::string_view s) {
  std::u32string cps = utf8_decode(s);
  for (char32_t& c : cps) c = fold_char(c);
  return utf8_encode(cps);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n') {
      std::string_view line = s.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.emplace_back(line);
      start = i + 1;
    }
  }
  if (!lines.empty() && lines.back().empty() && !s.empty() && s.back() == '\n') {
    lines.pop_back();
  }
  return lines;
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string strip_edge_punct(std::string_view token) {
  std::u32string cps = utf8_decode(token);
  std::size_t b = 0, e = cps.size();
  while (b < e && is_punct(cps[b])) ++b;
  while (e > b && is_punct(cps[e - 1])) --e;
  return utf8_encode(std::u32string_view(cps).substr(b, e - b));
}

namespace {

// Accent folding for slug generation; returns empty when the character has
// no ASCII counterpart.
std::string ascii_fold(char32_t c) {
  c = fold_char(c);
  if ((c >= U'a' && c <= U'z') || (c >= U'0' && c <= U'9')) return std::string(1, static_cast<char>(c));
  switch (c) {
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5: return "a";
    case 0xE7: return "c";
    case 0xE8: case 0xE9: case 0xEA: case 0xEB: return "e";
    case 0xEC: case 0xED: case 0xEE: case 0xEF: return "i";
    case 0xF1: return "n";
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8: return "o";
    case 0xF9: case 0xFA: case 0xFB: case 0xFC: return "u";
    case 0xFD: case 0xFF: return "y";
    case 0xE6: return "ae";
    case 0x153: return "oe";
    case 0xDF: return "ss";
    default: break;
  }
  if (c >= 0x100 && c <= 0x17F) {
    // Latin Extended-A groups by base letter.
    if (c <= 0x105) return "a";
    if (c <= 0x10D) return "c";
    if (c <= 0x111) return "d";
    if (c <= 0x11B) return "e";
    if (c <= 0x123) return "g";
    if (c <= 0x127) return "h";
    if (c <= 0x133) return "i";
    if (c <= 0x135) return "j";
    if (c <= 0x138) return "k";
    if (c <= 0x142) return "l";
    if (c <= 0x14B) return "n";
    if (c <= 0x151) return "o";
    if (c <= 0x159) return "r";
    if (c <= 0x161) return "s";
    if (c <= 0x167) return "t";
    if (c <= 0x173) return "u";
    if (c <= 0x175) return "w";
    if (c <= 0x178) return "y";
    if (c <= 0x17E) return "z";
  }
  return "";
}

}  // namespace

std::string slugify(std::string_view s) {
  std::string out;
  bool pending_sep = false;
  for (char32_t c : utf8_decode(s)) {
    std::string mapped = ascii_fold(c);
    if (mapped.empty()) {
      if (!out.empty()) pending_sep = true;
      continue;
    }
    if (pending_sep) {
      out.push_back('-');
      pending_sep = false;
    }
    out += mapped;
  }
  if (out.empty()) out = "x";
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  if (from.empty()) return s;
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

}  // namespace showprog::text
