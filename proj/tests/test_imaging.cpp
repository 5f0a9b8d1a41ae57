#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "showprog/imaging/image.hpp"
#include "showprog/imaging/ops.hpp"
#include "showprog/imaging/pnm.hpp"
#include "showprog/support/errors.hpp"
#include "support/testutil.hpp"

using namespace showprog;
using imaging::PageImage;
using imaging::TextMask;

namespace {

PageImage solid_grey(int w, int h, std::uint8_t value) {
  return imaging::make_page("doc", 0, w, h, std::vector<std::uint8_t>(std::size_t(w) * h, value));
}

PageImage solid_rgb(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  std::vector<std::uint8_t> px(std::size_t(w) * h * 3);
  for (std::size_t i = 0; i < px.size(); i += 3) {
    px[i] = r;
    px[i + 1] = g;
    px[i + 2] = b;
  }
  return imaging::make_page("doc", 0, w, h, std::move(px), 3);
}

// white page with black rectangles [x0,x1) x [y0,y1)
PageImage page_with_black_rects(int w, int h,
                                const std::vector<std::array<int, 4>>& rects) {
  PageImage img = solid_grey(w, h, 255);
  for (const auto& r : rects) {
    for (int y = r[2]; y < r[3]; ++y) {
      for (int x = r[0]; x < r[1]; ++x) img.at(x, y) = 0;
    }
  }
  return img;
}

}  // namespace

TEST_CASE("to_greyscale keeps an all-white RGB page all white") {
  PageImage grey = imaging::to_greyscale(solid_rgb(20, 10, 255, 255, 255));
  CHECK(grey.channels == 1);
  for (auto p : grey.pixels) CHECK(p == 255);
}

TEST_CASE("to_greyscale is the identity on grey input") {
  PageImage src = solid_grey(13, 7, 99);
  src.pixels[5] = 42;
  PageImage out = imaging::to_greyscale(src);
  CHECK(out.pixels == src.pixels);
  CHECK(out.width == src.width);
}

TEST_CASE("to_greyscale matches a per-pixel luminance oracle") {
  testutil::Rng rng(7);
  int w = 31, h = 17;
  std::vector<std::uint8_t> px(std::size_t(w) * h * 3);
  for (auto& v : px) v = std::uint8_t(rng.below(256));
  PageImage src = imaging::make_page("doc", 0, w, h, px, 3);
  PageImage out = imaging::to_greyscale(src);
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    double expected = 0.299 * px[3 * i] + 0.587 * px[3 * i + 1] + 0.114 * px[3 * i + 2];
    CHECK(out.pixels[i] == std::uint8_t(std::lround(expected)));
  }
  // known pixel: pure red
  PageImage red = imaging::to_greyscale(solid_rgb(1, 1, 255, 0, 0));
  CHECK(red.pixels[0] == std::uint8_t(std::lround(0.299 * 255)));
}

TEST_CASE("to_greyscale is idempotent") {
  testutil::Rng rng(11);
  std::vector<std::uint8_t> px(60 * 40 * 3);
  for (auto& v : px) v = std::uint8_t(rng.below(256));
  PageImage once = imaging::to_greyscale(imaging::make_page("d", 0, 60, 40, px, 3));
  PageImage twice = imaging::to_greyscale(once);
  CHECK(once.pixels == twice.pixels);
}

TEST_CASE("to_greyscale rejects empty images") {
  PageImage empty;
  CHECK_THROWS_AS(imaging::to_greyscale(empty), InvalidInputError);
}

TEST_CASE("fit_under_byte_limit is a no-op when already small") {
  PageImage img = solid_grey(30, 30, 128);  // ~915 bytes encoded
  PageImage out = imaging::fit_under_byte_limit(img, 5'000'000);
  CHECK(out.width == img.width);
  CHECK(out.pixels == img.pixels);
}

TEST_CASE("fit_under_byte_limit shrinks a 50 MB page under the bound") {
  // ~50 MB: 8400 x 6000
  PageImage img = solid_grey(8400, 6000, 200);
  REQUIRE(imaging::encoded_size(img) > 50'000'000);
  PageImage out = imaging::fit_under_byte_limit(img, 5'000'000);
  CHECK(imaging::encoded_size(out) <= 5'000'000);
  double ratio_in = double(img.width) / img.height;
  double ratio_out = double(out.width) / out.height;
  CHECK(std::abs(ratio_out / ratio_in - 1.0) < 0.001);
  // applying again with the same limit is a no-op
  PageImage again = imaging::fit_under_byte_limit(out, 5'000'000);
  CHECK(again.pixels == out.pixels);
}

TEST_CASE("fit_under_byte_limit fails cleanly on an impossible limit") {
  CHECK_THROWS_AS(imaging::fit_under_byte_limit(solid_grey(100, 100, 0), 1),
                  ScalingFailureError);
}

TEST_CASE("binarize_text_mask maps blank and solid pages") {
  TextMask blank = imaging::binarize_text_mask(solid_grey(40, 20, 255));
  CHECK(blank.true_count() == 0);
  TextMask full = imaging::binarize_text_mask(solid_grey(40, 20, 0));
  CHECK(full.true_count() == std::size_t(40) * 20);
  CHECK(full.width == 40);
  CHECK(full.height == 20);
}

TEST_CASE("binarize_text_mask finds two text columns") {
  // columns at x in [10,30) and [60,80), rows [5,45)
  PageImage img = page_with_black_rects(100, 50, {{10, 30, 5, 45}, {60, 80, 5, 45}});
  imaging::BinarizeParams params;
  params.dilation_radius = 1;
  TextMask mask = imaging::binarize_text_mask(img, params);
  auto column_sum = [&](int x) {
    int acc = 0;
    for (int y = 0; y < mask.height; ++y) acc += mask.at(x, y) ? 1 : 0;
    return acc;
  };
  for (int x = 0; x < 100; ++x) {
    bool in_col = (x >= 10 - params.dilation_radius && x < 30 + params.dilation_radius) ||
                  (x >= 60 - params.dilation_radius && x < 80 + params.dilation_radius);
    if (in_col) {
      CHECK(column_sum(x) > 0);
    } else {
      CHECK(column_sum(x) == 0);
    }
  }
}

TEST_CASE("mask covers every black pixel and nothing beyond the dilation radius") {
  testutil::Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    int w = 60 + int(rng.below(60));
    int h = 40 + int(rng.below(40));
    std::vector<std::array<int, 4>> rects;
    int n = 1 + int(rng.below(4));
    for (int k = 0; k < n; ++k) {
      int x0 = int(rng.below(std::uint64_t(w - 10)));
      int y0 = int(rng.below(std::uint64_t(h - 8)));
      rects.push_back({x0, x0 + 4 + int(rng.below(6)), y0, y0 + 3 + int(rng.below(5))});
    }
    PageImage img = page_with_black_rects(w, h, rects);
    imaging::BinarizeParams params;
    params.dilation_radius = 1 + int(rng.below(2));
    TextMask mask = imaging::binarize_text_mask(img, params);

    auto black_near = [&](int x, int y) {
      for (int dy = -params.dilation_radius; dy <= params.dilation_radius; ++dy) {
        for (int dx = -params.dilation_radius; dx <= params.dilation_radius; ++dx) {
          int nx = x + dx, ny = y + dy;
          if (nx >= 0 && nx < w && ny >= 0 && ny < h && img.at(nx, ny) == 0) return true;
        }
      }
      return false;
    };
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (img.at(x, y) == 0) CHECK(mask.at(x, y));
        if (mask.at(x, y)) CHECK(black_near(x, y));
      }
    }
  }
}

TEST_CASE("pnm round-trips grey and color pages and pbm round-trips masks") {
  testutil::Rng rng(5);
  std::vector<std::uint8_t> px(37 * 11);
  for (auto& v : px) v = std::uint8_t(rng.below(256));
  PageImage grey = imaging::make_page("d", 3, 37, 11, px);
  PageImage grey2 = imaging::decode_pnm(imaging::encode_pnm(grey));
  CHECK(grey2.width == 37);
  CHECK(grey2.height == 11);
  CHECK(grey2.pixels == grey.pixels);
  CHECK(imaging::encode_pnm(grey).size() == imaging::encoded_size(grey));

  std::vector<std::uint8_t> cpx(9 * 4 * 3);
  for (auto& v : cpx) v = std::uint8_t(rng.below(256));
  PageImage color = imaging::make_page("d", 0, 9, 4, cpx, 3);
  CHECK(imaging::decode_pnm(imaging::encode_pnm(color)).pixels == cpx);

  TextMask mask = imaging::make_mask(19, 7);
  for (int y = 0; y < 7; ++y) {
    for (int x = 0; x < 19; ++x) mask.set(x, y, rng.below(2) == 1);
  }
  TextMask mask2 = imaging::decode_pbm(imaging::encode_pbm(mask));
  CHECK(mask2.bits == mask.bits);

  testutil::TempDir tmp("pnm");
  imaging::write_pnm(tmp.path() / "a.pgm", grey);
  CHECK(imaging::read_pnm(tmp.path() / "a.pgm").pixels == grey.pixels);
  imaging::write_pbm(tmp.path() / "m.pbm", mask);
  CHECK(imaging::read_pbm(tmp.path() / "m.pbm").bits == mask.bits);
}

TEST_CASE("resample averages areas") {
  PageImage img = solid_grey(4, 4, 0);
  // right half white -> 2x1 downscale mixes to mid grey per half
  for (int y = 0; y < 4; ++y) {
    for (int x = 2; x < 4; ++x) img.at(x, y) = 255;
  }
  PageImage out = imaging::resample(img, 2, 2);
  CHECK(out.at(0, 0) == 0);
  CHECK(out.at(1, 0) == 255);
  PageImage one = imaging::resample(img, 1, 1);
  CHECK(one.at(0, 0) == 128);  // round(127.5)
}
