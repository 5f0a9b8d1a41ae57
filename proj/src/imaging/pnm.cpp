#include "showprog/imaging/pnm.hpp"

#include <string>

#include "showprog/support/errors.hpp"
#include "showprog/support/fsutil.hpp"

namespace showprog::imaging {

namespace {

std::string pnm_header(const PageImage& image) {
  const char* magic = image.channels == 3 ? "P6" : "P5";
  return std::string(magic) + "\n" + std::to_string(image.width) + " " +
         std::to_string(image.height) + "\n255\n";
}

class HeaderReader {
 public:
  explicit HeaderReader(const std::vector<std::uint8_t>& data) : data_(data) {}

  std::string magic() {
    skip_space();
    std::string m;
    while (pos_ < data_.size() && !isspace_at(pos_)) m.push_back(static_cast<char>(data_[pos_++]));
    return m;
  }

  int next_int() {
    skip_space();
    if (pos_ >= data_.size() || data_[pos_] < '0' || data_[pos_] > '9') {
      throw ParseError("malformed PNM header");
    }
    long v = 0;
    while (pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '9') {
      v = v * 10 + (data_[pos_++] - '0');
      if (v > 1'000'000'000L) throw ParseError("PNM dimension out of range");
    }
    return static_cast<int>(v);
  }

  // Position of the first payload byte: exactly one whitespace byte follows
  // the last header token.
  std::size_t payload_start() {
    if (pos_ >= data_.size() || !isspace_at(pos_)) throw ParseError("truncated PNM header");
    return pos_ + 1;
  }

 private:
  bool isspace_at(std::size_t i) const {
    std::uint8_t c = data_[i];
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void skip_space() {
    while (pos_ < data_.size()) {
      if (isspace_at(pos_)) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<std::uint8_t>& data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::size_t TextMask::true_count() const {
  std::size_t n = 0;
  for (std::uint8_t b : bits) n += b;
  return n;
}

PageImage make_page(std::string doc_id, int page_index, int width, int height,
                    std::vector<std::uint8_t> pixels, int channels) {
  if (width <= 0 || height <= 0) throw InvalidInputError("page dimensions must be positive");
  if (channels != 1 && channels != 3) throw InvalidInputError("unsupported channel count");
  if (pixels.size() != static_cast<std::size_t>(width) * height * channels) {
    throw InvalidInputError("pixel buffer does not match dimensions");
  }
  PageImage p;
  p.doc_id = std::move(doc_id);
  p.page_index = page_index;
  p.width = width;
  p.height = height;
  p.channels = channels;
  p.pixels = std::move(pixels);
  return p;
}

TextMask make_mask(int width, int height) {
  if (width <= 0 || height <= 0) throw InvalidInputError("mask dimensions must be positive");
  TextMask m;
  m.width = width;
  m.height = height;
  m.bits.assign(static_cast<std::size_t>(width) * height, 0);
  return m;
}

std::vector<std::uint8_t> encode_pnm(const PageImage& image) {
  if (image.pixel_count() == 0) throw InvalidInputError("cannot encode empty image");
  std::string header = pnm_header(image);
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.pixels.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

std::size_t encoded_size(const PageImage& image) {
  return pnm_header(image).size() + image.pixels.size();
}

PageImage decode_pnm(const std::vector<std::uint8_t>& data) {
  HeaderReader hr(data);
  std::string magic = hr.magic();
  int channels = 0;
  if (magic == "P5") {
    channels = 1;
  } else if (magic == "P6") {
    channels = 3;
  } else {
    throw ParseError("unsupported PNM magic: " + magic);
  }
  int w = hr.next_int();
  int h = hr.next_int();
  int maxval = hr.next_int();
  if (maxval != 255) throw ParseError("only maxval 255 is supported");
  std::size_t start = hr.payload_start();
  std::size_t need = static_cast<std::size_t>(w) * h * channels;
  if (data.size() - start < need) throw ParseError("truncated PNM payload");
  std::vector<std::uint8_t> pixels(data.begin() + static_cast<std::ptrdiff_t>(start),
                                   data.begin() + static_cast<std::ptrdiff_t>(start + need));
  return make_page("", 0, w, h, std::move(pixels), channels);
}

std::vector<std::uint8_t> encode_pbm(const TextMask& mask) {
  std::string header = "P4\n" + std::to_string(mask.width) + " " + std::to_string(mask.height) + "\n";
  std::size_t row_bytes = (static_cast<std::size_t>(mask.width) + 7) / 8;
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + row_bytes * mask.height);
  for (int y = 0; y < mask.height; ++y) {
    std::uint8_t cur = 0;
    int nbits = 0;
    for (int x = 0; x < mask.width; ++x) {
      cur = static_cast<std::uint8_t>((cur << 1) | (mask.at(x, y) ? 1 : 0));
      if (++nbits == 8) {
        out.push_back(cur);
        cur = 0;
        nbits = 0;
      }
    }
    if (nbits > 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - nbits)));
  }
  return out;
}

TextMask decode_pbm(const std::vector<std::uint8_t>& data) {
  HeaderReader hr(data);
  if (hr.magic() != "P4") throw ParseError("not a binary PBM file");
  int w = hr.next_int();
  int h = hr.next_int();
  std::size_t start = hr.payload_start();
  std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
  if (data.size() - start < row_bytes * h) throw ParseError("truncated PBM payload");
  TextMask mask = make_mask(w, h);
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* row = data.data() + start + static_cast<std::size_t>(y) * row_bytes;
    for (int x = 0; x < w; ++x) {
      bool v = (row[x / 8] >> (7 - (x % 8))) & 1;
      mask.set(x, y, v);
    }
  }
  return mask;
}

void write_pnm(const std::filesystem::path& path, const PageImage& image) {
  auto data = encode_pnm(image);
  fsutil::write_binary(path, data.data(), data.size());
}

PageImage read_pnm(const std::filesystem::path& path) {
  return decode_pnm(fsutil::read_binary(path));
}

void write_pbm(const std::filesystem::path& path, const TextMask& mask) {
  auto data = encode_pbm(mask);
  fsutil::write_binary(path, data.data(), data.size());
}

TextMask read_pbm(const std::filesystem::path& path) {
  return decode_pbm(fsutil::read_binary(path));
}

}  // namespace showprog::imaging
