#pragma once

#include <cstdint>
#include <random>

namespace polar {

// Deterministic random stream. Every frame of a sweep gets its own stream
// derived from (master seed, frame index), so results do not depend on how
// trials are distributed over workers. Gaussian and uniform variates are
// generated with explicit transforms on top of mt19937_64, which the
// standard pins down bit-exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  static Rng for_frame(std::uint64_t master_seed, std::uint64_t frame_index) {
    return Rng(mix(master_seed ^ mix(frame_index + 1)));
  }

  std::uint64_t next_u64() { return gen_(); }

  int next_bit() { return static_cast<int>(gen_() >> 63); }

  // Uniform on (0,1]; never returns 0 so it is safe under log().
  double next_uniform_pos() {
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform on [0,1).
  double next_uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double next_gaussian();

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace polar
