#pragma once

#include <cstdint>

namespace stepskew {

// Counter-based generator: the i-th block is a pure function of (seed, i),
// so streams are reproducible across platforms and trivially splittable.
// Mixing function is splitmix64.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t block(uint64_t counter) const { return mix(seed_ ^ mix(counter)); }

  uint64_t next_u64() { return block(counter_++); }

  // Fair bit stream, 64 bits per block.
  int next_bit() {
    if (bits_left_ == 0) {
      bit_buffer_ = next_u64();
      bits_left_ = 64;
    }
    int b = static_cast<int>(bit_buffer_ & 1u);
    bit_buffer_ >>= 1;
    --bits_left_;
    return b;
  }

  // Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  uint64_t next_below(uint64_t n) {
    // Rejection-free modulo bias is negligible for the n used here, but keep
    // the rejection loop so identical seeds give identical values regardless.
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
  uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace stepskew
