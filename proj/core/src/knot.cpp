#include "polyknot/knot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyknot/predicates.hpp"

namespace polyknot {

BoundingBox bounding_box(std::span<const Vec3> pts) {
  BoundingBox box{pts.empty() ? Vec3{} : pts[0], pts.empty() ? Vec3{} : pts[0]};
  for (const Vec3& p : pts) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.lo.z = std::min(box.lo.z, p.z);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
    box.hi.z = std::max(box.hi.z, p.z);
  }
  return box;
}

Direction::Direction(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) fail(Errc::invalid_argument, "zero or non-finite direction");
  v_ = v / n;
  if (std::abs(norm(v_) - 1.0) > 1e-12) v_ = v_ / norm(v_);
}

namespace {

double default_eps(std::span<const Vec3> pts, double eps) {
  if (eps > 0.0) return eps;
  const double diag = bounding_box(pts).diagonal();
  return kGeomEpsRel * (diag > 0.0 ? diag : 1.0);
}

}  // namespace

SimplicityReport is_simple(std::span<const Vec3> vertices, double eps) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) fail(Errc::too_few_vertices, "need at least 3 vertices, got " + std::to_string(n));
  eps = default_eps(vertices, eps);
  for (int i = 0; i < n; ++i) {
    if (dist(vertices[i], vertices[(i + 1) % n]) <= eps)
      fail(Errc::degenerate_edge, "consecutive vertices " + std::to_string(i) + "," +
                                      std::to_string((i + 1) % n) + " coincide",
           i);
  }

  auto adjacent = [n](int i, int j) {
    const int d = std::abs(i - j);
    return d <= 1 || d == n - 1;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adjacent(i, j)) continue;
      const double d = segment_segment_distance(vertices[i], vertices[(i + 1) % n], vertices[j],
                                                vertices[(j + 1) % n]);
      if (d <= eps) {
        return {false, SimplicityViolation{SimplicityViolation::Kind::edge_edge, i, j}};
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < n; ++e) {
      if (e == v || (e + 1) % n == v) continue;  // edges incident to v
      if (point_segment_distance(vertices[v], vertices[e], vertices[(e + 1) % n]) <= eps) {
        return {false, SimplicityViolation{SimplicityViolation::Kind::vertex_edge, v, e}};
      }
    }
  }
  return {true, std::nullopt};
}

PolygonalKnot::PolygonalKnot(std::vector<Vec3> v, BoundingBox box)
    : v_(std::move(v)), bbox_(box), diag_(box.diagonal()) {}

PolygonalKnot PolygonalKnot::from_vertices(std::vector<Vec3> vertices, double eps) {
  const SimplicityReport rep = is_simple(vertices, eps);
  if (!rep.simple) {
    const auto& viol = *rep.first;
    fail(Errc::not_simple,
         viol.kind == SimplicityViolation::Kind::edge_edge
             ? "edges " + std::to_string(viol.a) + " and " + std::to_string(viol.b) + " intersect"
             : "vertex " + std::to_string(viol.a) + " lies on edge " + std::to_string(viol.b),
         viol.a);
  }
  const BoundingBox box = bounding_box(vertices);
  return PolygonalKnot(std::move(vertices), box);
}

double PolygonalKnot::clearance() const {
  const int n = size();
  double c = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = std::abs(i - j);
      if (d <= 1 || d == n - 1) continue;
      c = std::min(c, segment_segment_distance(v_[i], v_[(i + 1) % n], v_[j], v_[(j + 1) % n]));
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < n; ++e) {
      if (e == v || (e + 1) % n == v) continue;
      c = std::min(c, point_segment_distance(v_[v], v_[e], v_[(e + 1) % n]));
    }
  }
  return c;
}

double PolygonalKnot::distance_to(const Vec3& p) const {
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) d = std::min(d, point_segment_distance(p, vertex(i), vertex(i + 1)));
  return d;
}

}  // namespace polyknot
