#include "polyknot/generate.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polyknot/isotopy.hpp"
#include "polyknot/rng.hpp"

namespace polyknot {

PolygonalKnot generate_convex_ngon(const ConvexNgonParams& params) {
  if (params.n < 3 || params.radius <= 0.0)
    fail(Errc::invalid_argument, "convex_ngon needs n >= 3 and a positive radius");
  std::vector<Vec3> v;
  v.reserve(params.n);
  for (int i = 0; i < params.n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / params.n;
    v.push_back({params.radius * std::cos(a), params.radius * std::sin(a), 0.0});
  }
  return PolygonalKnot::from_vertices(std::move(v));
}

PolygonalKnot generate_torus_knot(const TorusKnotParams& params) {
  if (params.p < 1 || params.q < 1 || params.samples < 3 || params.R <= 0.0 || params.r <= 0.0)
    fail(Errc::invalid_argument, "torus_knot needs positive p, q, R, r and samples >= 3");
  std::vector<Vec3> v;
  v.reserve(params.samples);
  for (int i = 0; i < params.samples; ++i) {
    // Half-step phase: the projection's double points then fall between
    // samples instead of exactly onto vertex images.
    const double t = 2.0 * std::numbers::pi * (i + 0.5) / params.samples;
    const double w = params.R + params.r * std::cos(params.q * t);
    v.push_back({w * std::cos(params.p * t), w * std::sin(params.p * t),
                 params.r * std::sin(params.q * t)});
  }
  return PolygonalKnot::from_vertices(std::move(v));
}

PolygonalKnot generate_random_closed(const RandomClosedParams& params, std::uint64_t seed) {
  if (params.n < 3) fail(Errc::invalid_argument, "random_closed needs n >= 3");
  constexpr int kRetries = 64;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<Vec3> steps(params.n);
    Vec3 drift{};
    for (int i = 0; i < params.n; ++i) {
      steps[i] = rng::gaussian3(rng::key(seed, attempt, i));
      drift += steps[i];
    }
    // Closing up: subtract the mean displacement from every step.
    const Vec3 corr = drift / static_cast<double>(params.n);
    std::vector<Vec3> v(params.n);
    Vec3 pos{};
    bool degenerate = false;
    for (int i = 0; i < params.n; ++i) {
      v[i] = pos;
      const Vec3 step = steps[i] - corr;
      if (norm(step) < 1e-6) degenerate = true;
      pos += step;
    }
    if (degenerate) continue;
    if (is_simple(v).simple) return PolygonalKnot::from_vertices(std::move(v));
  }
  fail(Errc::generation_failed,
       "random_closed produced no simple curve in " + std::to_string(kRetries) + " attempts");
}

PolygonalKnot generate_scrambled_unknot(const ScrambledUnknotParams& params, std::uint64_t seed) {
  std::vector<Vec3> tri;
  for (int i = 0; i < 3; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 3.0;
    tri.push_back({std::cos(a), std::sin(a), 0.0});
  }
  const PolygonalKnot base = PolygonalKnot::from_vertices(std::move(tri));
  return scramble(base, params.steps, seed).first;
}

}  // namespace polyknot
