#pragma once

#include <vector>

#include "polyknot/generate.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/predicates.hpp"

namespace fixtures {

using namespace polyknot;

inline PolygonalKnot square() { return generate_convex_ngon({4, 1.0}); }
inline PolygonalKnot ngon(int n, double radius = 1.0) { return generate_convex_ngon({n, radius}); }
inline PolygonalKnot trefoil() { return generate_torus_knot({2, 3, 60, 2.0, 1.0}); }
inline PolygonalKnot cinquefoil() { return generate_torus_knot({2, 5, 80, 2.0, 0.8}); }

// Figure-eight knot: knotted but not tricolorable, so neither certificate
// fires; useful for exercising inconclusive verdicts.
inline PolygonalKnot figure_eight(int samples = 80) {
  std::vector<Vec3> v;
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * 3.14159265358979323846 * (i + 0.5) / samples;
    v.push_back({(2 + std::cos(2 * t)) * std::cos(3 * t),
                 (2 + std::cos(2 * t)) * std::sin(3 * t), std::sin(4 * t)});
  }
  return PolygonalKnot::from_vertices(std::move(v));
}

// Same cyclic vertex sequence up to rotation.
inline bool cyclically_equal(const PolygonalKnot& a, const PolygonalKnot& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  for (int shift = 0; shift < n; ++shift) {
    bool all = true;
    for (int i = 0; i < n && all; ++i) all = a.vertex(i) == b.vertex(i + shift);
    if (all) return true;
  }
  return false;
}

// Independent segment/segment distance: minimize the quadratic over the unit
// square by enumerating the interior stationary point, the four clamped
// edges, and the four corners. A different derivation route than the
// implementation's case analysis.
inline double oracle_segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0,
                                      const Vec3& b1) {
  const Vec3 d1 = a1 - a0, d2 = b1 - b0, r = a0 - b0;
  auto clamp01 = [](double x) { return std::min(1.0, std::max(0.0, x)); };
  auto value = [&](double s, double t) { return norm(a0 + d1 * s - (b0 + d2 * t)); };

  double best = 1e300;
  auto consider = [&](double s, double t) { best = std::min(best, value(s, t)); };

  const double A = dot(d1, d1), B = dot(d1, d2), C = dot(d2, d2);
  const double det = A * C - B * B;
  if (det > 0.0) {
    const double s = (B * dot(r, d2) - C * dot(r, d1)) / det;
    const double t = (A * dot(r, d2) - B * dot(r, d1)) / det;
    if (s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0) consider(s, t);
  }
  if (C > 0.0) {
    consider(0.0, clamp01(dot(r, d2) / C));                 // s = 0 edge
    consider(1.0, clamp01(dot(r + d1, d2) / C));            // s = 1 edge
  }
  if (A > 0.0) {
    consider(clamp01(-dot(r, d1) / A), 0.0);                // t = 0 edge
    consider(clamp01(dot(d2 - r, d1) / A), 1.0);            // t = 1 edge
  }
  for (double s : {0.0, 1.0})
    for (double t : {0.0, 1.0}) consider(s, t);
  return best;
}

inline double oracle_point_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double len2 = norm2(ab);
  const double t = len2 > 0 ? std::min(1.0, std::max(0.0, dot(p - a, ab) / len2)) : 0.0;
  return dist(p, a + ab * t);
}

// Brute-force simplicity oracle: every non-adjacent pair of edges must stay
// apart, every vertex away from non-incident edges.
inline bool oracle_simple(const std::vector<Vec3>& v, double eps) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = j - i;
      if (d <= 1 || d == n - 1) continue;
      if (oracle_segment_distance(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) <= eps) return false;
    }
  for (int w = 0; w < n; ++w)
    for (int e = 0; e < n; ++e) {
      if (e == w || (e + 1) % n == w) continue;
      if (oracle_point_segment(v[w], v[e], v[(e + 1) % n]) <= eps) return false;
    }
  return true;
}

// Distance from d to the plane spanned by a, b, c; the coplanarity oracle.
inline double plane_distance(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 w = cross(b - a, c - a);
  const double area2 = norm(w);
  if (area2 <= 0.0) return 0.0;
  return std::abs(dot(w, d - a)) / area2;
}

}  // namespace fixtures
