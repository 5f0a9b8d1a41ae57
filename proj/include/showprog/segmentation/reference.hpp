#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "showprog/segmentation/projection.hpp"

namespace showprog::segmentation {

// Per-year median subpage widths (full-scale pixels) with the empirically
// set tolerance factor. Thresholds derive as t = tolerance * median.
class ReferenceWidthTable {
 public:
  ReferenceWidthTable() = default;
  explicit ReferenceWidthTable(double tolerance);

  void set_entry(const std::string& period, int year, int median_width);
  bool has_year(int year) const;
  int median_width(int year) const;  // throws MissingReferenceError
  double tolerance() const { return tolerance_; }
  void set_tolerance(double t);

  const std::map<std::pair<std::string, int>, int>& entries() const { return entries_; }

  // Plain-text `period,year,median_width` lines; dump/load round-trips
  // byte-exactly.
  std::string dump() const;
  static ReferenceWidthTable parse(const std::string& text, double tolerance = 0.93);
  static ReferenceWidthTable load(const std::filesystem::path& path, double tolerance = 0.93);
  void save(const std::filesystem::path& path) const;

 private:
  std::map<std::pair<std::string, int>, int> entries_;
  double tolerance_ = 0.93;
};

// Lower median for even-length lists; deterministic on integer widths.
int median_width(std::vector<int> widths);

ReferenceWidthTable compute_reference_widths(const std::string& period,
                                             const std::map<int, std::vector<int>>& widths_by_year,
                                             double tolerance = 0.93);

// True when any width falls outside [t, 2t], t = tolerance * median: the
// document needs post-segmentation.
bool select_candidates(const std::vector<int>& subpage_widths, const ReferenceWidthTable& refs,
                       int year);

// Drops separators that would create a subpage narrower than
// floor(tolerance * median); scan is left-to-right and iterative.
SeparatorSet filter_separators(const SeparatorSet& seps, int page_width,
                               const ReferenceWidthTable& refs, int year);

}  // namespace showprog::segmentation
