#include "showprog/segmentation/segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "showprog/imaging/ops.hpp"
#include "showprog/support/errors.hpp"

#include "json.hpp"

namespace showprog::segmentation {

namespace {

void check_separators(const SeparatorSet& seps, int width) {
  int last = 0;
  for (int x : seps.xs) {
    if (x <= 0 || x >= width) {
      throw InvalidSeparatorError("separator " + std::to_string(x) + " outside page of width " +
                                  std::to_string(width));
    }
    if (x <= last) throw InvalidSeparatorError("separators must be strictly increasing");
    last = x;
  }
}

std::string child_origin(const imaging::PageImage& parent, int slice) {
  std::string base = parent.origin ? *parent.origin : std::to_string(parent.page_index);
  return base + "/" + std::to_string(slice);
}

}  // namespace

std::vector<imaging::PageImage> split_page(const imaging::PageImage& image, const SeparatorSet& seps) {
  check_separators(seps, image.width);
  std::vector<int> cuts;
  cuts.push_back(0);
  cuts.insert(cuts.end(), seps.xs.begin(), seps.xs.end());
  cuts.push_back(image.width);

  std::vector<imaging::PageImage> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const int x0 = cuts[k];
    const int x1 = cuts[k + 1];
    imaging::PageImage sub;
    sub.doc_id = image.doc_id;
    sub.page_index = image.page_index;
    sub.width = x1 - x0;
    sub.height = image.height;
    sub.channels = image.channels;
    sub.dpi = image.dpi;
    sub.origin = child_origin(image, static_cast<int>(k));
    sub.pixels.resize(static_cast<std::size_t>(sub.width) * sub.height * sub.channels);
    for (int y = 0; y < image.height; ++y) {
      const std::uint8_t* src = &image.pixels[(static_cast<std::size_t>(y) * image.width + x0) * image.channels];
      std::uint8_t* dst = &sub.pixels[static_cast<std::size_t>(y) * sub.width * sub.channels];
      std::copy(src, src + static_cast<std::size_t>(sub.width) * sub.channels, dst);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<imaging::TextMask> split_mask(const imaging::TextMask& mask, const SeparatorSet& seps) {
  check_separators(seps, mask.width);
  std::vector<int> cuts;
  cuts.push_back(0);
  cuts.insert(cuts.end(), seps.xs.begin(), seps.xs.end());
  cuts.push_back(mask.width);

  std::vector<imaging::TextMask> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const int x0 = cuts[k];
    const int x1 = cuts[k + 1];
    imaging::TextMask sub = imaging::make_mask(x1 - x0, mask.height);
    for (int y = 0; y < mask.height; ++y) {
      for (int x = x0; x < x1; ++x) sub.set(x - x0, y, mask.at(x, y));
    }
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<imaging::PageImage> normalize_pages(const std::vector<imaging::PageImage>& subpages,
                                                const std::vector<imaging::TextMask>& masks,
                                                const ReferenceWidthTable& refs, int year,
                                                const SegmentationConfig& config) {
  if (subpages.size() != masks.size()) {
    throw InvalidInputError("masks must align with subpages");
  }
  const double t = refs.tolerance() * refs.median_width(year);

  std::vector<imaging::PageImage> out;
  for (std::size_t i = 0; i < subpages.size(); ++i) {
    const imaging::PageImage& page = subpages[i];
    const imaging::TextMask& mask = masks[i];
    if (page.width <= 2.0 * t) {
      out.push_back(page);
      continue;
    }
    const int band_cols = std::max(1, static_cast<int>(std::lround(page.width * config.band_fraction)));
    const int x0 = std::max(0, page.width / 2 - band_cols / 2);
    const int x1 = std::min(page.width, x0 + band_cols);
    std::size_t band_true = 0;
    for (int y = 0; y < mask.height; ++y) {
      for (int x = x0; x < x1; ++x) {
        if (mask.at(x, y)) ++band_true;
      }
    }
    const double band_area = static_cast<double>(x1 - x0) * mask.height;
    if (static_cast<double>(band_true) < config.band_density * band_area) {
      SeparatorSet mid;
      mid.xs = {page.width / 2};
      auto halves = split_page(page, mid);
      out.push_back(std::move(halves[0]));
      out.push_back(std::move(halves[1]));
    } else {
      out.push_back(page);
    }
  }
  return out;
}

ReorderResult reorder_born_digital(const std::vector<imaging::PageImage>& subpages) {
  ReorderResult result;
  if (subpages.size() < 3) {
    result.pages = subpages;
    result.warning = "born-digital reorder needs at least 3 subpages; leaving order unchanged";
    return result;
  }
  result.pages.push_back(subpages.back());
  result.pages.push_back(subpages[1]);
  result.pages.push_back(subpages[0]);
  for (std::size_t i = 2; i + 1 < subpages.size(); ++i) {
    result.pages.push_back(subpages[i]);
  }
  return result;
}

int SegmentationReport::documents_post_segmented() const {
  int n = 0;
  for (const auto& r : records) {
    if (r.phase == "post-applied") ++n;
  }
  return n;
}

std::string SegmentationReport::to_jsonl() const {
  std::ostringstream out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["doc_id"] = r.doc_id;
    j["pages_in"] = r.pages_in;
    j["subpages_out"] = r.subpages_out;
    j["phase"] = r.phase;
    j["separators"] = r.separators_per_page;
    j["warnings"] = r.warnings;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string SegmentationReport::to_markdown() const {
  int pages = 0, subpages = 0;
  for (const auto& r : records) {
    pages += r.pages_in;
    subpages += r.subpages_out;
  }
  std::ostringstream out;
  out << "# Segmentation summary\n\n";
  out << "| Corpus | Correct % | Correct #page | Incorrect % | Incorrect #page | Total |\n";
  out << "|---|---|---|---|---|---|\n";
  out << "| All | (review) | (review) | (review) | (review) | " << subpages << " |\n\n";
  out << "Correct/incorrect counts are filled in by manual review of the output pages.\n\n";
  out << "| Documents | Pages in | Subpages out | Post-segmented docs |\n";
  out << "|---|---|---|---|\n";
  out << "| " << records.size() << " | " << pages << " | " << subpages << " | "
      << documents_post_segmented() << " |\n";
  return out.str();
}

DocSegmentation segment_document(const std::vector<imaging::PageImage>& pages,
                                 const std::vector<imaging::TextMask>* external_masks,
                                 const ReferenceWidthTable& refs, int year,
                                 const SegmentationConfig& config) {
  if (pages.empty()) throw InvalidInputError("document has no pages");
  if (external_masks && external_masks->size() != pages.size()) {
    throw InvalidInputError("external masks must align with document pages");
  }

  DocSegmentation result;
  result.record.doc_id = pages.front().doc_id;
  result.record.pages_in = static_cast<int>(pages.size());

  const int median = refs.median_width(year);
  imaging::BinarizeParams bin;
  bin.dilation_radius = config.dilation_radius;

  std::vector<imaging::TextMask> masks;
  masks.reserve(pages.size());
  std::vector<SeparatorSet> page_seps(pages.size());
  std::vector<int> phase1_widths;

  for (std::size_t i = 0; i < pages.size(); ++i) {
    const imaging::PageImage& page = pages[i];
    masks.push_back(external_masks ? (*external_masks)[i]
                                   : imaging::binarize_text_mask(page, bin));
    const double sigma = std::max(0.5, page.width / config.sigma_divisor);
    ProjectionProfile profile = vertical_projection(masks.back(), sigma);
    PeakParams params;
    params.min_distance = config.distance_factor * median;
    params.min_prominence =
        config.prominence_factor * *std::max_element(profile.smoothed.begin(), profile.smoothed.end());
    page_seps[i] = detect_separators(profile, params);
    page_seps[i].doc_id = page.doc_id;
    page_seps[i].page_index = page.page_index;
    int last = 0;
    for (int x : page_seps[i].xs) {
      phase1_widths.push_back(x - last);
      last = x;
    }
    phase1_widths.push_back(page.width - last);
  }

  const bool post = select_candidates(phase1_widths, refs, year);
  result.record.phase = post ? "post-applied" : "pre-only";

  std::vector<imaging::PageImage> subpages;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    SeparatorSet seps = page_seps[i];
    if (post) seps = filter_separators(seps, pages[i].width, refs, year);
    result.record.separators_per_page.push_back(seps.xs);
    auto subs = split_page(pages[i], seps);
    if (post) {
      auto sub_masks = split_mask(masks[i], seps);
      subs = normalize_pages(subs, sub_masks, refs, year, config);
    }
    for (auto& s : subs) subpages.push_back(std::move(s));
  }

  if (config.born_digital_reorder) {
    ReorderResult reordered = reorder_born_digital(subpages);
    subpages = std::move(reordered.pages);
    if (reordered.warning) result.record.warnings.push_back(*reordered.warning);
  }

  for (std::size_t i = 0; i < subpages.size(); ++i) {
    subpages[i].page_index = static_cast<int>(i);
  }
  result.record.subpages_out = static_cast<int>(subpages.size());
  result.subpages = std::move(subpages);
  return result;
}

}  // namespace showprog::segmentation
