#pragma once

#include <string>
#include <vector>

#include "showprog/imaging/image.hpp"

namespace showprog::segmentation {

// Per-column sums of a text mask plus their Gaussian-smoothed form.
struct ProjectionProfile {
  std::vector<double> values;
  std::vector<double> smoothed;
  double sigma = 0.0;
};

// Separator x-coordinates, strictly increasing, strictly inside the page.
struct SeparatorSet {
  std::vector<int> xs;
  std::string doc_id;
  int page_index = 0;
};

ProjectionProfile vertical_projection(const imaging::TextMask& mask, double sigma);

std::vector<double> gaussian_smooth(const std::vector<double>& values, double sigma);

struct PeakParams {
  double min_distance = 1.0;    // minimum spacing between kept peaks, px
  double min_prominence = 0.0;  // absolute prominence floor
};

// Local maxima of `values` under distance and prominence constraints.
// Plateaus resolve to their midpoint; plateaus touching the array boundary
// are never peaks.
std::vector<int> find_peaks(const std::vector<double>& values, const PeakParams& params);

// Separators are peaks of the inverted smoothed profile (text gaps).
SeparatorSet detect_separators(const ProjectionProfile& profile, const PeakParams& params);

}  // namespace showprog::segmentation
