#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "showprog/imaging/image.hpp"

namespace showprog::imaging {

// Binary PNM codecs: PGM (P5) for grey pages, PPM (P6) for color sources,
// PBM (P4) for 1-bit text masks. These are the interchange formats of the
// pipeline; PGM bytes are also the submission payload, so encoded_size()
// is the quantity bounded by the API byte limit.

std::vector<std::uint8_t> encode_pnm(const PageImage& image);
PageImage decode_pnm(const std::vector<std::uint8_t>& data);
std::size_t encoded_size(const PageImage& image);

std::vector<std::uint8_t> encode_pbm(const TextMask& mask);
TextMask decode_pbm(const std::vector<std::uint8_t>& data);

void write_pnm(const std::filesystem::path& path, const PageImage& image);
PageImage read_pnm(const std::filesystem::path& path);
void write_pbm(const std::filesystem::path& path, const TextMask& mask);
TextMask read_pbm(const std::filesystem::path& path);

}  // namespace showprog::imaging
