#pragma once

#include <cstdint>
#include <string>

namespace mdikey {

// Counter-style PRNG used everywhere randomness is needed. All streams are
// derived from one top-level seed, so thread count never changes results.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Independent per-task stream from one top-level seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 s(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  s.next();
  return s.next();
}

std::int64_t poisson_sample(SplitMix64& rng, double mean);
std::int64_t binomial_sample(SplitMix64& rng, std::int64_t n, double p);
// draws |sample ∩ special| when `sample` indexes are drawn without
// replacement from a population of `population` items, `special` of which
// are marked
std::int64_t hypergeometric_sample(SplitMix64& rng, std::int64_t population,
                                   std::int64_t special, std::int64_t sample);

// Smallest c with P[Binomial(n, p) <= c] >= level.
std::int64_t binomial_quantile(std::int64_t n, double p, double level);

// Fixed-format float for CSV output (stable across runs).
std::string format_double(double v);

}  // namespace mdikey
