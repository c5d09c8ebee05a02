#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dtd {

// Derives an independent stream seed from a master seed plus a tag and up to
// two numeric discriminators. Stateless: the same inputs always give the same
// stream, which is what makes mid-run resume and parallel execution
// reproducible without shipping RNG state around.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t a = 0, std::uint64_t b = 0);

// Thin wrapper over mt19937_64 with portable draw helpers. The standard
// distributions are implementation-defined, so uniform/normal/below are
// implemented explicitly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller (no cached spare; one pair per call keeps
  // the stream position independent of call parity).
  double normal();

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i + 1));
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dtd
