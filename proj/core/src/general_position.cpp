#include "polyknot/general_position.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyknot/predicates.hpp"
#include "polyknot/rng.hpp"

namespace polyknot {

const char* gp_mode_name(GpMode m) {
  switch (m) {
    case GpMode::distinct_heights: return "distinct-heights";
    case GpMode::no_four_coplanar: return "no-four-coplanar";
    case GpMode::generic_projection: return "generic-projection";
  }
  return "?";
}

namespace {

void check_distinct_heights(const PolygonalKnot& k, const Vec3& u, double eps,
                            GeneralPositionReport& rep) {
  const int n = k.size();
  std::vector<double> h(n);
  for (int i = 0; i < n; ++i) h[i] = dot(u, k.vertex(i));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h[a] < h[b]; });
  // Every tied pair, not just sorted neighbors.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && h[order[j]] - h[order[i]] <= eps; ++j)
      rep.violations.push_back(
          {std::min(order[i], order[j]), std::max(order[i], order[j])});
}

void check_no_four_coplanar(const PolygonalKnot& k, double eps, GeneralPositionReport& rep) {
  const int n = k.size();
  const double collinear_tol = eps;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const Vec3 w = cross(k.vertex(b) - k.vertex(a), k.vertex(c) - k.vertex(a));
        const double area2 = norm(w);
        for (int d = c + 1; d < n; ++d) {
          bool coplanar;
          if (area2 <= collinear_tol * dist(k.vertex(a), k.vertex(b))) {
            // Three collinear points lie on a plane with any fourth point.
            coplanar = true;
          } else {
            coplanar = std::abs(dot(w, k.vertex(d) - k.vertex(a))) / area2 <= eps;
          }
          if (coplanar) rep.violations.push_back({a, b, c, d});
        }
      }
}

void check_generic_projection(const PolygonalKnot& k, const Vec3& u, double eps,
                              GeneralPositionReport& rep) {
  const int n = k.size();
  // Orthonormal frame of the projection plane.
  const Vec3 helper = std::abs(u.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(u, helper));
  const Vec3 e2 = cross(u, e1);
  std::vector<Vec2> q(n);
  for (int i = 0; i < n; ++i) q[i] = {dot(e1, k.vertex(i)), dot(e2, k.vertex(i))};

  for (int i = 0; i < n; ++i) {
    if (dist(q[i], q[(i + 1) % n]) <= eps) rep.violations.push_back({i});  // edge degenerates
  }
  // Fold-back at a vertex makes adjacent projected edges overlap.
  for (int i = 0; i < n; ++i) {
    const Vec2 a = q[(i + n - 1) % n] - q[i];
    const Vec2 b = q[(i + 1) % n] - q[i];
    if (norm(a) > eps && norm(b) > eps && angle_between(a, b) < 1e-6)
      rep.violations.push_back({(i + n - 1) % n, i});
  }
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < n; ++e) {
      if (e == v || (e + 1) % n == v) continue;
      const Vec2 a = q[e], b = q[(e + 1) % n];
      const Vec2 ab = b - a;
      const double len2 = norm2(ab);
      double t = len2 > 0 ? dot(q[v] - a, ab) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      if (dist(q[v], a + ab * t) <= eps) rep.violations.push_back({v, e});
    }
  }

  struct Hit {
    Vec2 p;
    int i, j;
  };
  std::vector<Hit> hits;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = j - i;
      if (d <= 1 || d == n - 1) continue;
      const Vec2 p = q[i], r = q[(i + 1) % n] - q[i];
      const Vec2 s = q[j], w = q[(j + 1) % n] - q[j];
      const double denom = cross(r, w);
      const double rn = norm(r), wn = norm(w);
      if (rn <= eps || wn <= eps) continue;
      if (std::abs(denom) / (rn * wn) < 1e-6) {
        // Near-parallel: only a problem when the segments nearly touch.
        Vec3 a3{p.x, p.y, 0}, b3{p.x + r.x, p.y + r.y, 0};
        Vec3 c3{s.x, s.y, 0}, d3{s.x + w.x, s.y + w.y, 0};
        if (segment_segment_distance(a3, b3, c3, d3) <= eps) rep.violations.push_back({i, j});
        continue;
      }
      const double t = cross(s - p, w) / denom;
      const double tt = cross(s - p, r) / denom;
      if (t < 0.0 || t > 1.0 || tt < 0.0 || tt > 1.0) continue;
      const Vec2 x = p + r * t;
      bool bad = false;
      for (int vtx = 0; vtx < n; ++vtx) {
        if (dist(x, q[vtx]) <= eps) {
          rep.violations.push_back({i, j, vtx});
          bad = true;
          break;
        }
      }
      if (!bad) hits.push_back({x, i, j});
    }
  }
  for (size_t a = 0; a < hits.size(); ++a)
    for (size_t b = a + 1; b < hits.size(); ++b)
      if (dist(hits[a].p, hits[b].p) <= eps)
        rep.violations.push_back({hits[a].i, hits[a].j, hits[b].i, hits[b].j});
}

}  // namespace

GeneralPositionReport check_general_position(const PolygonalKnot& knot, GpMode mode,
                                             std::optional<Direction> u, double eps) {
  eps = eps > 0.0 ? eps : knot.geom_eps();
  GeneralPositionReport rep{mode, false, {}};
  switch (mode) {
    case GpMode::distinct_heights:
      if (!u) fail(Errc::missing_direction, "distinct-heights needs a direction");
      check_distinct_heights(knot, u->vec(), eps, rep);
      break;
    case GpMode::no_four_coplanar:
      check_no_four_coplanar(knot, eps, rep);
      break;
    case GpMode::generic_projection:
      if (!u) fail(Errc::missing_direction, "generic-projection needs a direction");
      check_generic_projection(knot, u->vec(), eps, rep);
      break;
  }
  rep.pass = rep.violations.empty();
  return rep;
}

PolygonalKnot perturb(const PolygonalKnot& knot, double magnitude, std::uint64_t seed) {
  if (magnitude < 0.0) fail(Errc::invalid_argument, "magnitude must be non-negative");
  if (magnitude == 0.0) return knot;
  const double clearance = knot.clearance();
  if (!(magnitude < 0.5 * clearance))
    fail(Errc::magnitude_too_large, "magnitude " + std::to_string(magnitude) +
                                        " exceeds half the clearance " + std::to_string(clearance));
  std::vector<Vec3> out = knot.vertices();
  for (int i = 0; i < knot.size(); ++i)
    for (int c = 0; c < 3; ++c)
      out[i][c] += rng::uniform(rng::key(seed, i, c), -magnitude, magnitude);
  const SimplicityReport rep = is_simple(out);
  if (!rep.simple) fail(Errc::simplicity_lost, "perturbed curve failed the simplicity re-check");
  return PolygonalKnot::from_vertices(std::move(out));
}

PolygonalKnot make_generic(const PolygonalKnot& knot, std::uint64_t seed) {
  if (check_general_position(knot, GpMode::no_four_coplanar).pass) return knot;
  const double magnitude = 1e-6 * knot.bbox_diagonal();
  for (int attempt = 0; attempt < 32; ++attempt) {
    const PolygonalKnot moved = perturb(knot, magnitude, rng::key(seed, 0x67656eULL, attempt));
    if (check_general_position(moved, GpMode::no_four_coplanar).pass) return moved;
  }
  fail(Errc::generation_failed, "no generic perturbation found in 32 attempts");
}

}  // namespace polyknot
