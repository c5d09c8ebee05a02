#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dtd {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t fnv1a(std::string_view bytes,
                              std::uint64_t h = kFnvOffset) {
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t fnv1a_u64(std::uint64_t v, std::uint64_t h) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

// Hex digest used to stamp artifacts with the config that produced them.
std::string hash_hex(std::string_view bytes);

// Hash of an existing file's contents. Throws std::runtime_error if the file
// cannot be read.
std::string hash_file(const std::string& path);

}  // namespace dtd
