#pragma once

#include <cstdint>

namespace seedgo {

// splitmix64: 64-bit state, one additive step plus two xor-shift-multiply
// finalization steps per output. The generator is bit-exact by construction,
// so a fixed seed gives the same sequence on every platform and in every
// language that reimplements it. Constants are the canonical ones:
//   gamma = 0x9E3779B97F4A7C15
//   mul1  = 0xBF58476D1CE4E5B9, shift 30
//   mul2  = 0x94D049BB133111EB, shift 27, final shift 31
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n) by rejection: draw v until
  // v < 2^64 - (2^64 mod n), return v mod n. This exact procedure is
  // normative; replayed transcripts depend on how many draws it consumes.
  // n must be >= 1.
  uint64_t uniform_below(uint64_t n) {
    // rem = 2^64 mod n, computed in 64-bit arithmetic.
    const uint64_t rem = (0 - n) % n;
    if (rem == 0) {
      return next_u64() % n;  // n divides 2^64: single draw, no rejection
    }
    const uint64_t limit = 0 - rem;  // = 2^64 - rem
    for (;;) {
      const uint64_t v = next_u64();
      if (v < limit) return v % n;
    }
  }

  uint64_t state() const { return state_; }

  friend bool operator==(const SplitMix64& a, const SplitMix64& b) {
    return a.state_ == b.state_;
  }

 private:
  uint64_t state_;
};

}  // namespace seedgo
