#pragma once

#include <cstdint>
#include <string_view>

namespace scenforge {

/// splitmix64 finalizer; the basis for both the stream generator and
/// seed derivation, chosen so results do not depend on the standard
/// library's distribution implementations.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derive an independent child seed from a root seed, a purpose tag and an
/// index. Same inputs, same seed; used to parallelize without sharing state.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t index = 0);

/// Deterministic RNG with self-contained distributions (uniform, gaussian).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Index in [0, n).
  std::size_t index(std::size_t n) {
    return n == 0 ? 0 : std::size_t(uniform_int(0, std::int64_t(n) - 1));
  }

  /// Box-Muller normal deviate.
  double gaussian(double mean, double stddev);

 private:
  std::uint64_t state_;
};

}  // namespace scenforge
