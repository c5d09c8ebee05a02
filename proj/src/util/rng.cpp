#include "dtd/util/rng.hpp"

#include <cmath>

#include "dtd/util/hash.hpp"

namespace dtd {

namespace {
// splitmix64 finalizer; spreads low-entropy fnv output across all bits.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = fnv1a(tag);
  h = fnv1a_u64(master, h);
  h = fnv1a_u64(a, h);
  h = fnv1a_u64(b, h);
  return mix(h);
}

std::uint64_t Rng::below(std::uint64_t n) {
  // Unbiased via rejection on the top of the range.
  const std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x > limit);
  return x % n;
}

double Rng::normal() {
  // Box-Muller; u clamped away from 0 so log stays finite.
  double u = uniform();
  if (u <= 0.0) u = 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 6.283185307179586476925 * uniform();
  return r * std::cos(theta);
}

}  // namespace dtd
