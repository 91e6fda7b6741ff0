#pragma once

#include <cstdint>
#include <numbers>

#include "polyknot/vec.hpp"

// Counter-based deterministic randomness. Every draw is a pure function of a
// key assembled from (seed, stream indices), so results do not depend on
// evaluation order and Monte Carlo loops can be sharded freely.

namespace polyknot::rng {

constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t key(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
  std::uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ULL);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

// Uniform in [0, 1).
inline double uniform01(std::uint64_t k) {
  return static_cast<double>(mix64(k) >> 11) * 0x1.0p-53;
}

// Uniform in (0, 1), safe as a log argument.
inline double uniform01_open(std::uint64_t k) {
  return (static_cast<double>(mix64(k) >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform(std::uint64_t k, double lo, double hi) {
  return lo + (hi - lo) * uniform01(k);
}

// Standard normal pair via Box-Muller.
inline void gaussian2(std::uint64_t k, double& g0, double& g1) {
  const double u = uniform01_open(key(k, 0x67617573ULL));
  const double v = uniform01(key(k, 0x6e6f726dULL));
  const double r = std::sqrt(-2.0 * std::log(u));
  const double a = 2.0 * std::numbers::pi * v;
  g0 = r * std::cos(a);
  g1 = r * std::sin(a);
}

inline Vec3 gaussian3(std::uint64_t k) {
  double g0, g1, g2, g3;
  gaussian2(key(k, 1), g0, g1);
  gaussian2(key(k, 2), g2, g3);
  return {g0, g1, g2};
}

// Uniform direction on the unit sphere: three normals, normalized.
inline Vec3 unit_sphere(std::uint64_t k) {
  for (std::uint64_t salt = 0;; ++salt) {
    const Vec3 g = gaussian3(key(k, 0x73706872ULL, salt));
    const double n = norm(g);
    if (n > 1e-8) return g / n;
  }
}

// i-th of n near-uniform deterministic directions (spherical Fibonacci lattice).
inline Vec3 fibonacci_dir(int i, int n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(n);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double a = golden_angle * static_cast<double>(i);
  return {r * std::cos(a), r * std::sin(a), z};
}

}  // namespace polyknot::rng
