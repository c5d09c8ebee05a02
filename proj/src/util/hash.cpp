#include "dtd/util/hash.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dtd {

std::string hash_hex(std::string_view bytes) {
  const std::uint64_t h = fnv1a(bytes);
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) {
    out[15 - i] = digits[(h >> (4 * i)) & 0xf];
  }
  return out;
}

std::string hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for hashing: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return hash_hex(ss.str());
}

}  // namespace dtd
