#include "showprog/imaging/ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "showprog/imaging/pnm.hpp"
#include "showprog/support/errors.hpp"

namespace showprog::imaging {

PageImage to_greyscale(const PageImage& image) {
  if (image.pixel_count() == 0) throw InvalidInputError("empty image");
  if (image.channels == 1) return image;
  PageImage out = image;
  out.channels = 1;
  out.pixels.resize(image.pixel_count());
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    const std::uint8_t* px = &image.pixels[i * 3];
    double y = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
    out.pixels[i] = static_cast<std::uint8_t>(std::lround(std::min(255.0, y)));
  }
  return out;
}

PageImage resample(const PageImage& image, int new_width, int new_height) {
  if (!image.grey()) throw InvalidInputError("resample expects a greyscale page");
  if (new_width <= 0 || new_height <= 0) throw InvalidInputError("target dimensions must be positive");
  if (new_width == image.width && new_height == image.height) return image;

  const double sx = static_cast<double>(image.width) / new_width;
  const double sy = static_cast<double>(image.height) / new_height;
  PageImage out = image;
  out.width = new_width;
  out.height = new_height;
  out.pixels.assign(static_cast<std::size_t>(new_width) * new_height, 0);

  for (int dy = 0; dy < new_height; ++dy) {
    const double y0 = dy * sy;
    const double y1 = (dy + 1) * sy;
    const int iy0 = static_cast<int>(std::floor(y0));
    const int iy1 = std::min(image.height, static_cast<int>(std::ceil(y1)));
    for (int dx = 0; dx < new_width; ++dx) {
      const double x0 = dx * sx;
      const double x1 = (dx + 1) * sx;
      const int ix0 = static_cast<int>(std::floor(x0));
      const int ix1 = std::min(image.width, static_cast<int>(std::ceil(x1)));
      double acc = 0.0;
      double area = 0.0;
      for (int y = iy0; y < iy1; ++y) {
        const double hy = std::min<double>(y + 1, y1) - std::max<double>(y, y0);
        for (int x = ix0; x < ix1; ++x) {
          const double wx = std::min<double>(x + 1, x1) - std::max<double>(x, x0);
          acc += image.at(x, y) * wx * hy;
          area += wx * hy;
        }
      }
      out.at(dx, dy) = static_cast<std::uint8_t>(std::lround(acc / area));
    }
  }
  return out;
}

PageImage fit_under_byte_limit(const PageImage& image, std::size_t limit_bytes) {
  if (limit_bytes == 0) throw InvalidInputError("byte limit must be positive");
  if (image.pixel_count() == 0) throw InvalidInputError("empty image");
  if (!image.grey()) throw InvalidInputError("fit_under_byte_limit expects a greyscale page");

  if (encoded_size(image) <= limit_bytes) return image;

  PageImage floor_probe = image;
  floor_probe.width = 1;
  floor_probe.height = 1;
  floor_probe.pixels.assign(1, 0);
  if (encoded_size(floor_probe) > limit_bytes) {
    throw ScalingFailureError("limit of " + std::to_string(limit_bytes) +
                              " bytes is unreachable even at 1x1");
  }

  double scale =
      std::sqrt(static_cast<double>(limit_bytes) / static_cast<double>(encoded_size(image)));
  for (;;) {
    int nw = std::max(1, static_cast<int>(std::lround(image.width * scale)));
    int nh = std::max(1, static_cast<int>(std::lround(image.height * scale)));
    PageImage probe;
    probe.width = nw;
    probe.height = nh;
    probe.pixels.resize(static_cast<std::size_t>(nw) * nh);
    if (encoded_size(probe) <= limit_bytes) return resample(image, nw, nh);
    scale *= 0.995;
  }
}

namespace {

// Returns -1 when the histogram has no separable classes (constant image).
int otsu_threshold(const std::array<std::size_t, 256>& hist, std::size_t total) {
  double sum = 0.0;
  for (int i = 0; i < 256; ++i) sum += static_cast<double>(i) * hist[static_cast<std::size_t>(i)];
  double sum_b = 0.0;
  std::size_t w_b = 0;
  double best = 0.0;
  int threshold = -1;
  for (int t = 0; t < 256; ++t) {
    w_b += hist[static_cast<std::size_t>(t)];
    if (w_b == 0) continue;
    std::size_t w_f = total - w_b;
    if (w_f == 0) break;
    sum_b += static_cast<double>(t) * hist[static_cast<std::size_t>(t)];
    double m_b = sum_b / w_b;
    double m_f = (sum - sum_b) / w_f;
    double var = static_cast<double>(w_b) * static_cast<double>(w_f) * (m_b - m_f) * (m_b - m_f);
    if (var > best) {
      best = var;
      threshold = t;
    }
  }
  return threshold;
}

TextMask dilate(const TextMask& in, int radius) {
  if (radius <= 0) return in;
  TextMask tmp = make_mask(in.width, in.height);
  // horizontal pass
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      bool v = false;
      for (int k = std::max(0, x - radius); k <= std::min(in.width - 1, x + radius) && !v; ++k) {
        v = in.at(k, y);
      }
      tmp.set(x, y, v);
    }
  }
  TextMask out = make_mask(in.width, in.height);
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      bool v = false;
      for (int k = std::max(0, y - radius); k <= std::min(in.height - 1, y + radius) && !v; ++k) {
        v = tmp.at(x, k);
      }
      out.set(x, y, v);
    }
  }
  return out;
}

}  // namespace

TextMask binarize_text_mask(const PageImage& image, const BinarizeParams& params) {
  if (image.pixel_count() == 0) throw InvalidInputError("empty image");
  if (!image.grey()) throw InvalidInputError("binarize_text_mask expects a greyscale page");

  std::array<std::size_t, 256> hist{};
  for (std::uint8_t p : image.pixels) ++hist[p];
  int threshold = otsu_threshold(hist, image.pixel_count());

  TextMask mask = make_mask(image.width, image.height);
  if (threshold < 0) {
    // Constant page: treat a dark page as full ink, a light one as blank.
    if (image.pixels[0] < 128) mask.bits.assign(mask.bits.size(), 1);
    return dilate(mask, params.dilation_radius);
  }
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    mask.bits[i] = image.pixels[i] <= threshold ? 1 : 0;
  }
  return dilate(mask, params.dilation_radius);
}

}  // namespace showprog::imaging
