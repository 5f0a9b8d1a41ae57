#include "showprog/segmentation/reference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"
#include "showprog/support/text.hpp"

namespace showprog::segmentation {

ReferenceWidthTable::ReferenceWidthTable(double tolerance) { set_tolerance(tolerance); }

void ReferenceWidthTable::set_tolerance(double t) {
  if (t <= 0.0 || t > 1.0) throw InvalidInputError("tolerance must be in (0, 1]");
  tolerance_ = t;
}

void ReferenceWidthTable::set_entry(const std::string& period, int year, int width) {
  if (width <= 0) throw InvalidInputError("median width must be positive");
  entries_[{period, year}] = width;
}

bool ReferenceWidthTable::has_year(int year) const {
  for (const auto& [key, _] : entries_) {
    if (key.second == year) return true;
  }
  return false;
}

int ReferenceWidthTable::median_width(int year) const {
  for (const auto& [key, width] : entries_) {
    if (key.second == year) return width;
  }
  throw MissingReferenceError("no reference width for year " + std::to_string(year));
}

std::string ReferenceWidthTable::dump() const {
  std::ostringstream out;
  for (const auto& [key, width] : entries_) {
    out << key.first << ',' << key.second << ',' << width << '\n';
  }
  return out.str();
}

ReferenceWidthTable ReferenceWidthTable::parse(const std::string& content, double tolerance) {
  ReferenceWidthTable table(tolerance);
  for (const std::string& raw : text::split_lines(content)) {
    std::string line = text::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t c1 = line.find(',');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("malformed reference width line: " + line);
    std::string period = line.substr(0, c1);
    int year = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    int width = std::stoi(line.substr(c2 + 1));
    table.set_entry(period, year, width);
  }
  return table;
}

ReferenceWidthTable ReferenceWidthTable::load(const std::filesystem::path& path, double tolerance) {
  return parse(fsutil::read_file(path), tolerance);
}

void ReferenceWidthTable::save(const std::filesystem::path& path) const {
  fsutil::write_file(path, dump());
}

int median_width(std::vector<int> widths) {
  if (widths.empty()) throw MissingDataError("cannot take the median of an empty width list");
  std::sort(widths.begin(), widths.end());
  return widths[(widths.size() - 1) / 2];
}

ReferenceWidthTable compute_reference_widths(const std::string& period,
                                             const std::map<int, std::vector<int>>& widths_by_year,
                                             double tolerance) {
  ReferenceWidthTable table(tolerance);
  for (const auto& [year, widths] : widths_by_year) {
    if (widths.empty()) {
      throw MissingDataError("no widths recorded for year " + std::to_string(year));
    }
    table.set_entry(period, year, median_width(widths));
  }
  return table;
}

bool select_candidates(const std::vector<int>& subpage_widths, const ReferenceWidthTable& refs,
                       int year) {
  const double t = refs.tolerance() * refs.median_width(year);
  for (int w : subpage_widths) {
    if (w < t || w > 2.0 * t) return true;
  }
  return false;
}

SeparatorSet filter_separators(const SeparatorSet& seps, int page_width,
                               const ReferenceWidthTable& refs, int year) {
  const int min_width = static_cast<int>(std::floor(refs.tolerance() * refs.median_width(year)));
  SeparatorSet out;
  out.doc_id = seps.doc_id;
  out.page_index = seps.page_index;
  int last = 0;
  for (int x : seps.xs) {
    if (x - last < min_width) continue;
    out.xs.push_back(x);
    last = x;
  }
  // the final subpage must also satisfy the width floor
  while (!out.xs.empty() && page_width - out.xs.back() < min_width) {
    out.xs.pop_back();
  }
  return out;
}

}  // namespace showprog::segmentation
