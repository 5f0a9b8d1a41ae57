#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace showprog::fsutil {

std::string read_file(const std::filesystem::path& path);
std::vector<std::uint8_t> read_binary(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
void write_binary(const std::filesystem::path& path, const std::uint8_t* data, std::size_t size);
void append_line(const std::filesystem::path& path, std::string_view line);

// FNV-1a 64-bit, used for stage stamps and batch fingerprints.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

}  // namespace showprog::fsutil
