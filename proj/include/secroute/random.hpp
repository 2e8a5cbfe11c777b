#pragma once

#include <cstdint>
#include <random>

namespace secroute {

// splitmix64 step; used to derive independent sub-seeds so that every run,
// retry and rollout stream is reproducible from one top-level seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(base) ^ a) ^ b);
}

// Uniform double in [0, 1). Hand-rolled instead of
// std::uniform_real_distribution, whose output is implementation-defined;
// this keeps seeded runs bit-identical across toolchains.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi]. Modulo bias is irrelevant at the ranges used
// here; determinism is what matters.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace secroute
