#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "showprog/support/fsutil.hpp"

namespace testutil {

// splitmix64: stable across standard libraries, unlike <random>
// distributions, so committed fixtures and goldens never drift.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("showprog-" + tag + "-" + std::to_string(counter_++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

// Compares against a committed golden file. Set SHOWPROG_UPDATE_GOLDEN=1 to
// rewrite goldens after an intentional change.
inline bool matches_golden(const std::filesystem::path& golden, const std::string& actual,
                           std::string* message = nullptr) {
  const char* update = std::getenv("SHOWPROG_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    showprog::fsutil::write_file(golden, actual);
    return true;
  }
  if (!std::filesystem::exists(golden)) {
    if (message) *message = "golden file missing: " + golden.string();
    return false;
  }
  std::string expected = showprog::fsutil::read_file(golden);
  if (expected != actual) {
    if (message) {
      *message = "golden mismatch: " + golden.string() + " (expected " +
                 std::to_string(expected.size()) + " bytes, got " +
                 std::to_string(actual.size()) + ")";
    }
    return false;
  }
  return true;
}

inline std::filesystem::path source_dir() { return std::filesystem::path(SHOWPROG_SOURCE_DIR); }
inline std::filesystem::path data_dir() { return source_dir() / "data"; }
inline std::filesystem::path fixture_dir() { return source_dir() / "tests" / "fixtures"; }

}  // namespace testutil
