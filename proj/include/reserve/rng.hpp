#ifndef RESERVE_RNG_HPP
#define RESERVE_RNG_HPP

#include <cstdint>

namespace reserve {

/// SplitMix64 (Steele, Lea & Flood), the usual 64-bit splittable generator.
/// Cheap enough to seed one per replicate, which keeps replicates independent
/// of thread scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Seed for the stream of one replicate: the replicate index is pushed through
/// the SplitMix64 finaliser so stream start states scatter over the full
/// 64-bit range instead of sitting one increment apart.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace reserve

#endif  // RESERVE_RNG_HPP
