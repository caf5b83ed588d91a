#pragma once

#include <cstdint>

namespace factorkit {

// SplitMix64.  Fixed-width unsigned arithmetic only, so an identical seed
// yields the identical stream on every platform.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Top 53 bits, compared against probability numerators over 2^53.
  std::uint64_t next_u53() { return next() >> 11; }

  // Uniform-enough value in [0, bound) by modulo; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // Independent per-index stream: the new state is SplitMix64(seed XOR index).
  static Prng derive(std::uint64_t seed, std::uint64_t index) {
    Prng mixer(seed ^ index);
    return Prng(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace factorkit
