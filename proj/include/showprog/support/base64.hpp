#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace showprog::base64 {

std::string encode(const std::uint8_t* data, std::size_t size);
inline std::string encode(const std::vector<std::uint8_t>& data) {
  return encode(data.data(), data.size());
}
std::vector<std::uint8_t> decode(std::string_view text);

}  // namespace showprog::base64
