#pragma once

#include <cstdint>

namespace lawforge {

// SplitMix64. Chosen over std::mt19937_64 because every draw we make must be
// bit-identical across platforms and standard library versions, including the
// integer-range reduction (std distributions are not portable). Streams are
// derived by hashing (seed, stream index), so independent trials can be split
// off deterministically.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed), seed_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, n) by rejection.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t limit = ~0ull - (~0ull % n + 1) % n;  // largest multiple of n, minus 1
    uint64_t v;
    do {
      v = next();
    } while (v > limit);
    return v % n;
  }

  bool coin() { return next() >> 63; }

  // Derived stream: deterministic function of (original seed, key).
  Rng split(uint64_t key) const {
    Rng mixer(seed_ ^ (0x6c617766756c6177ull + key * 0x9e3779b97f4a7c15ull));
    return Rng(mixer.next());
  }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t state_;
  uint64_t seed_;
};

}  // namespace lawforge
