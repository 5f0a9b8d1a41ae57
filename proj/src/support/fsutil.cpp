#include "showprog/support/fsutil.hpp"

#include <fstream>

#include "showprog/support/errors.hpp"

namespace showprog::fsutil {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return content;
}

std::vector<std::uint8_t> read_binary(const std::filesystem::path& path) {
  std::string s = read_file(path);
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("short write: " + path.string());
}

void write_binary(const std::filesystem::path& path, const std::uint8_t* data, std::size_t size) {
  write_file(path, std::string_view(reinterpret_cast<const char*>(data), size));
}

void append_line(const std::filesystem::path& path, std::string_view line) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot append to file: " + path.string());
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.put('\n');
  if (!out) throw IoError("short append: " + path.string());
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

}  // namespace showprog::fsutil
