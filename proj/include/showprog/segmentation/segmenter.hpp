#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "showprog/imaging/image.hpp"
#include "showprog/segmentation/projection.hpp"
#include "showprog/segmentation/reference.hpp"

namespace showprog::segmentation {

struct SegmentationConfig {
  double sigma_divisor = 200.0;     // gaussian sigma = page width / divisor
  double distance_factor = 0.2;     // min peak distance = factor * median width
  double prominence_factor = 0.1;   // min prominence = factor * max(smoothed)
  int dilation_radius = 1;          // built-in mask baseline
  double band_fraction = 0.04;      // central band width as fraction of page width
  double band_density = 0.005;      // "empty" band: true-pixel density below this
  bool born_digital_reorder = false;
};

struct SegmentationRecord {
  std::string doc_id;
  int pages_in = 0;
  int subpages_out = 0;
  std::string phase;  // "pre-only" | "post-applied"
  std::vector<std::vector<int>> separators_per_page;
  std::vector<std::string> warnings;
};

struct SegmentationReport {
  std::vector<SegmentationRecord> records;
  int documents_post_segmented() const;
  std::string to_jsonl() const;
  std::string to_markdown() const;  // Table-1-shaped summary; correctness columns are for human review
};

struct DocSegmentation {
  std::vector<imaging::PageImage> subpages;
  SegmentationRecord record;
};

// Cuts a page at the separator columns; subpage k spans [xs[k-1], xs[k]).
// Provenance strings record parent page and slice index.
std::vector<imaging::PageImage> split_page(const imaging::PageImage& image, const SeparatorSet& seps);
std::vector<imaging::TextMask> split_mask(const imaging::TextMask& mask, const SeparatorSet& seps);

// Splits any subpage wider than 2t whose central band carries no content.
std::vector<imaging::PageImage> normalize_pages(const std::vector<imaging::PageImage>& subpages,
                                                const std::vector<imaging::TextMask>& masks,
                                                const ReferenceWidthTable& refs, int year,
                                                const SegmentationConfig& config = {});

struct ReorderResult {
  std::vector<imaging::PageImage> pages;
  std::optional<std::string> warning;
};

// Restores printed reading order for born-digital flyers:
// [cover (last)] ++ [page 2] ++ [page 1] ++ [pages 3..n-1].
ReorderResult reorder_born_digital(const std::vector<imaging::PageImage>& subpages);

// Full two-phase pipeline for one document. `external_masks`, when given,
// must align with `pages` and replaces the built-in binarization.
DocSegmentation segment_document(const std::vector<imaging::PageImage>& pages,
                                 const std::vector<imaging::TextMask>* external_masks,
                                 const ReferenceWidthTable& refs, int year,
                                 const SegmentationConfig& config);

}  // namespace showprog::segmentation
