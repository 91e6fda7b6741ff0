#include "polyknot/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyknot/predicates.hpp"

namespace polyknot {

namespace {

double default_eps(std::span<const Vec3> pts, double eps) {
  if (eps > 0.0) return eps;
  const double diag = bounding_box(pts).diagonal();
  return kGeomEpsRel * (diag > 0.0 ? diag : 1.0);
}

// Angle between consecutive unit chords gets too close to pi for a minor arc.
constexpr double kAntipodalGuard = 1e-6;

}  // namespace

AngleProfile total_curvature(std::span<const Vec3> pts, bool closed, double eps) {
  const int n = static_cast<int>(pts.size());
  if (n < (closed ? 3 : 2)) fail(Errc::too_few_vertices, "polyline too short");
  eps = default_eps(pts, eps);

  AngleProfile prof;
  prof.external_angles.assign(n, 0.0);

  const int first = closed ? 0 : 1;
  const int last = closed ? n - 1 : n - 2;
  for (int i = first; i <= last; ++i) {
    const Vec3& prev = pts[(i - 1 + n) % n];
    const Vec3& cur = pts[i];
    const Vec3& next = pts[(i + 1) % n];
    const Vec3 e0 = cur - prev;
    const Vec3 e1 = next - cur;
    if (norm(e0) <= eps || norm(e1) <= eps)
      fail(Errc::degenerate_edge, "zero-length edge at vertex " + std::to_string(i), i);
    prof.external_angles[i] = angle_between(e0, e1);
  }
  for (double a : prof.external_angles) prof.total += a;
  return prof;
}

AngleProfile total_curvature(const PolygonalKnot& knot) {
  return total_curvature(knot.vertices(), true, knot.geom_eps());
}

double angular_length(std::span<const Vec3> pts, const Vec3& o, double eps) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) fail(Errc::too_few_vertices, "closed curve needs 3 vertices");
  eps = default_eps(pts, eps);
  for (int i = 0; i < n; ++i) {
    if (point_segment_distance(o, pts[i], pts[(i + 1) % n]) <= eps)
      fail(Errc::point_on_curve, "basepoint within eps of edge " + std::to_string(i), i);
  }
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += angle_between(pts[i] - o, pts[(i + 1) % n] - o);
  return sum;
}

double angular_length(const PolygonalKnot& knot, const Vec3& o, double eps) {
  return angular_length(knot.vertices(), o, eps > 0.0 ? eps : knot.geom_eps());
}

double SphericalPolyline::length() const {
  const int n = static_cast<int>(vertices.size());
  double sum = 0.0;
  const int last = closed ? n : n - 1;
  for (int i = 0; i < last; ++i) sum += angle_between(vertices[i], vertices[(i + 1) % n]);
  return sum;
}

SphericalPolyline radial_projection(const PolygonalKnot& knot, const Vec3& o, double eps) {
  eps = eps > 0.0 ? eps : knot.geom_eps();
  const int n = knot.size();
  for (int i = 0; i < n; ++i) {
    if (point_segment_distance(o, knot.vertex(i), knot.vertex(i + 1)) <= eps)
      fail(Errc::point_on_curve, "basepoint within eps of edge " + std::to_string(i), i);
  }
  SphericalPolyline out;
  out.closed = true;
  out.vertices.reserve(n);
  for (int i = 0; i < n; ++i) out.vertices.push_back(normalized(knot.vertex(i) - o));
  for (int i = 0; i < n; ++i) {
    const Vec3& a = out.vertices[i];
    const Vec3& b = out.vertices[(i + 1) % n];
    if (norm(a + b) <= kAntipodalGuard)
      fail(Errc::antipodal_edge, "edge " + std::to_string(i) + " projects to antipodal points", i);
  }
  return out;
}

std::vector<Vec3> inscribe(const PolygonalKnot& knot, std::span<const InscribeMark> marks) {
  const int m = static_cast<int>(marks.size());
  if (m < 3) fail(Errc::too_few_marks, "need at least 3 marks, got " + std::to_string(m));
  const int n = knot.size();

  std::vector<double> keys(m);
  for (int i = 0; i < m; ++i) {
    const auto& mk = marks[i];
    if (mk.edge < 0 || mk.edge >= n || mk.t < 0.0 || mk.t > 1.0)
      fail(Errc::invalid_argument, "mark " + std::to_string(i) + " outside the curve", i);
    keys[i] = mk.edge + mk.t;
  }
  // Cyclic order: strictly increasing after rotating the minimum first.
  const int start =
      static_cast<int>(std::min_element(keys.begin(), keys.end()) - keys.begin());
  for (int i = 1; i < m; ++i) {
    const double prev = keys[(start + i - 1) % m];
    const double cur = keys[(start + i) % m];
    if (!(cur > prev))
      fail(Errc::marks_out_of_order, "marks not in cyclic order along the knot",
           (start + i) % m);
  }

  std::vector<Vec3> out;
  out.reserve(m);
  for (const auto& mk : marks) out.push_back(knot.point_on_edge(mk.edge, mk.t));
  return out;
}

double cone_ball_area_ratio(const PolygonalKnot& knot, const Vec3& o, double r, double eps) {
  if (!(r > 0.0)) fail(Errc::invalid_argument, "radius must be positive");
  eps = eps > 0.0 ? eps : knot.geom_eps();
  const int n = knot.size();
  for (int i = 0; i < n; ++i) {
    if (point_segment_distance(o, knot.vertex(i), knot.vertex(i + 1)) <= eps)
      fail(Errc::point_on_curve, "cone tip within eps of edge " + std::to_string(i), i);
  }

  // Refinement: relative chord error of a strip of angular width h is h^2/6,
  // so h <= sqrt(6e-7) keeps the flat-cone case exact to well under 1e-6.
  const double max_step = std::sqrt(6e-7);

  double area = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec3 a = knot.vertex(i);
    const Vec3 b = knot.vertex(i + 1);
    const double span = angle_between(a - o, b - o);
    const int strips = std::max(1, static_cast<int>(std::ceil(span / max_step)));
    Vec3 d0 = normalized(a - o);
    for (int s = 1; s <= strips; ++s) {
      const double t = static_cast<double>(s) / strips;
      const Vec3 d1 = normalized(lerp(a, b, t) - o);
      area += 0.5 * r * r * norm(cross(d0, d1));
      d0 = d1;
    }
  }
  return area / (r * r);
}

}  // namespace polyknot
