#pragma once

#include <cstdint>

#include "showprog/imaging/image.hpp"

namespace showprog::imaging {

// Luminance conversion (Rec.601 weights, rounded). Identity for pages that
// are already greyscale; idempotent.
PageImage to_greyscale(const PageImage& image);

// Downscales a greyscale page (aspect ratio preserved, area-average
// resampling) until its encoded PGM size fits under limit_bytes. No-op when
// the page already fits. Throws ScalingFailureError when even a 1x1 page
// would exceed the limit.
PageImage fit_under_byte_limit(const PageImage& image, std::size_t limit_bytes);

struct BinarizeParams {
  int dilation_radius = 1;  // square structuring element half-width
};

// Built-in text mask baseline: global Otsu threshold on the grey histogram,
// ink = dark side, followed by a small square dilation. External mask
// providers can be swapped in through the PBM file interface.
TextMask binarize_text_mask(const PageImage& image, const BinarizeParams& params = {});

// Area-average resampling to exact target dimensions.
PageImage resample(const PageImage& image, int new_width, int new_height);

}  // namespace showprog::imaging
