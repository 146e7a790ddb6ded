// Deterministic seeded random source.  mt19937_64 output is fully specified
// by the standard, so runs are reproducible across platforms.
#pragma once

#include <cstdint>
#include <random>

namespace weilzeta {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish value in [0, n); the mod bias is irrelevant for the
  // randomized-splitting and sampling uses here and keeps output portable
  // (std::uniform_int_distribution is not specified bit-for-bit).
  std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Derive an independent deterministic stream, e.g. one per prime in a
  // parallel sweep.
  static Rng derived(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1));
    x ^= x >> 30; x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27; x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return Rng(x);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace weilzeta
