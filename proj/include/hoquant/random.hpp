#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace hoquant {

/// Stateless random draws keyed on a tuple of counters. The same key always
/// yields the same value, so Monte Carlo loops can run in any order or on any
/// number of threads and reproduce bit for bit.
namespace counter_rng {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash(std::initializer_list<std::uint64_t> key) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t k : key) h = mix(h ^ mix(k));
  return h;
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double uniform01(std::initializer_list<std::uint64_t> key) {
  return static_cast<double>(hash(key) >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
constexpr double uniform(double lo, double hi, std::initializer_list<std::uint64_t> key) {
  return lo + (hi - lo) * uniform01(key);
}

/// Standard normal by Box-Muller on two keyed uniforms; `salt` separates the
/// two streams.
inline double normal(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
  const double u1 = 1.0 - uniform01({seed, index, salt, 0});  // (0, 1]
  const double u2 = uniform01({seed, index, salt, 1});
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace counter_rng
}  // namespace hoquant
