#include "scenforge/rng.hpp"

#include <cmath>

namespace scenforge {

std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t index) {
  std::uint64_t h = mix64(root);
  for (unsigned char c : tag) h = mix64(h ^ c);
  return mix64(h ^ index);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  // rejection sampling keeps the draw unbiased for any span
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  std::uint64_t v = next_u64();
  while (v > limit) v = next_u64();
  return lo + std::int64_t(v % span);
}

double Rng::gaussian(double mean, double stddev) {
  double u1 = next_double();
  double u2 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * mag * std::cos(2.0 * M_PI * u2);
}

}  // namespace scenforge
