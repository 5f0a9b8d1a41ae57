#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace showprog::imaging {

// A raster page. Greyscale pages have channels == 1, color sources
// channels == 3 (interleaved RGB). `origin` tracks where a subpage came
// from after segmentation, e.g. "2/1" for slice 1 of source page 2.
struct PageImage {
  std::string doc_id;
  int page_index = 0;
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;  // row-major, channel-interleaved
  std::optional<int> dpi;
  std::optional<std::string> origin;

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  bool grey() const { return channels == 1; }

  std::uint8_t at(int x, int y, int c = 0) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t& at(int x, int y, int c = 0) {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
};

// Binary text mask aligned with a page; true marks a text (ink) pixel.
struct TextMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // 0 or 1, row-major

  bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
  std::size_t true_count() const;
};

PageImage make_page(std::string doc_id, int page_index, int width, int height,
                    std::vector<std::uint8_t> pixels, int channels = 1);
TextMask make_mask(int width, int height);

}  // namespace showprog::imaging
