#include "showprog/segmentation/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "showprog/support/errors.hpp"

namespace showprog::segmentation {

std::vector<double> gaussian_smooth(const std::vector<double>& values, double sigma) {
  if (sigma <= 0.0) throw InvalidInputError("sigma must be positive");
  const int n = static_cast<int>(values.size());
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    double w = std::exp(-(static_cast<double>(k) * k) / (2.0 * sigma * sigma));
    kernel[static_cast<std::size_t>(k + radius)] = w;
    sum += w;
  }
  for (double& w : kernel) w /= sum;

  // half-sample symmetric reflection at the borders
  auto reflect = [n](int i) {
    while (i < 0 || i >= n) {
      if (i < 0) i = -i - 1;
      if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
  };

  std::vector<double> out(values.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = -radius; k <= radius; ++k) {
      acc += kernel[static_cast<std::size_t>(k + radius)] * values[static_cast<std::size_t>(reflect(i + k))];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

ProjectionProfile vertical_projection(const imaging::TextMask& mask, double sigma) {
  if (mask.width <= 0 || mask.height <= 0) throw InvalidInputError("empty mask");
  ProjectionProfile profile;
  profile.sigma = sigma;
  profile.values.assign(static_cast<std::size_t>(mask.width), 0.0);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (mask.at(x, y)) profile.values[static_cast<std::size_t>(x)] += 1.0;
    }
  }
  profile.smoothed = gaussian_smooth(profile.values, sigma);
  return profile;
}

namespace {

struct RawPeak {
  int position;
  double height;
};

// Strict local maxima with plateau midpoints; boundary plateaus excluded.
std::vector<RawPeak> local_maxima(const std::vector<double>& v) {
  std::vector<RawPeak> peaks;
  const int n = static_cast<int>(v.size());
  int i = 1;
  while (i < n - 1) {
    if (v[static_cast<std::size_t>(i - 1)] < v[static_cast<std::size_t>(i)]) {
      int ahead = i + 1;
      while (ahead < n - 1 && v[static_cast<std::size_t>(ahead)] == v[static_cast<std::size_t>(i)]) ++ahead;
      if (v[static_cast<std::size_t>(ahead)] < v[static_cast<std::size_t>(i)]) {
        int mid = (i + ahead - 1) / 2;
        peaks.push_back({mid, v[static_cast<std::size_t>(mid)]});
        i = ahead;
        continue;
      }
      i = ahead;
      continue;
    }
    ++i;
  }
  return peaks;
}

double prominence_at(const std::vector<double>& v, int peak) {
  const int n = static_cast<int>(v.size());
  const double h = v[static_cast<std::size_t>(peak)];
  double left_min = h;
  for (int i = peak - 1; i >= 0; --i) {
    double x = v[static_cast<std::size_t>(i)];
    if (x > h) break;
    left_min = std::min(left_min, x);
  }
  double right_min = h;
  for (int i = peak + 1; i < n; ++i) {
    double x = v[static_cast<std::size_t>(i)];
    if (x > h) break;
    right_min = std::min(right_min, x);
  }
  return h - std::max(left_min, right_min);
}

// Highest peaks win; everything unkept within min_distance of a winner is
// suppressed.
std::vector<RawPeak> select_by_distance(std::vector<RawPeak> peaks, double min_distance) {
  if (min_distance <= 1.0 || peaks.size() < 2) return peaks;
  std::vector<std::size_t> order(peaks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (peaks[a].height != peaks[b].height) return peaks[a].height > peaks[b].height;
    return a < b;
  });
  std::vector<char> keep(peaks.size(), 1);
  for (std::size_t oi : order) {
    if (!keep[oi]) continue;
    for (std::size_t j = oi; j-- > 0;) {
      if (peaks[oi].position - peaks[j].position >= min_distance) break;
      keep[j] = 0;
    }
    for (std::size_t j = oi + 1; j < peaks.size(); ++j) {
      if (peaks[j].position - peaks[oi].position >= min_distance) break;
      keep[j] = 0;
    }
  }
  std::vector<RawPeak> out;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    if (keep[i]) out.push_back(peaks[i]);
  }
  return out;
}

}  // namespace

std::vector<int> find_peaks(const std::vector<double>& values, const PeakParams& params) {
  std::vector<RawPeak> peaks = local_maxima(values);
  peaks = select_by_distance(std::move(peaks), params.min_distance);
  std::vector<int> out;
  for (const RawPeak& p : peaks) {
    if (prominence_at(values, p.position) >= params.min_prominence) out.push_back(p.position);
  }
  return out;
}

SeparatorSet detect_separators(const ProjectionProfile& profile, const PeakParams& params) {
  if (profile.smoothed.empty()) throw InvalidInputError("empty profile");
  const double max_v = *std::max_element(profile.smoothed.begin(), profile.smoothed.end());
  std::vector<double> inverted(profile.smoothed.size());
  for (std::size_t i = 0; i < profile.smoothed.size(); ++i) {
    inverted[i] = max_v - profile.smoothed[i];
  }
  SeparatorSet seps;
  seps.xs = find_peaks(inverted, params);
  return seps;
}

}  // namespace showprog::segmentation
