#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyknot/error.hpp"
#include "polyknot/vec.hpp"

namespace polyknot {

// Relative incidence tolerance: eps_geom = 1e-9 * bounding-box diagonal unless
// a caller passes its own absolute value. Scale-invariant on arbitrary input.
constexpr double kGeomEpsRel = 1e-9;

struct BoundingBox {
  Vec3 lo, hi;
  double diagonal() const { return dist(lo, hi); }
  Vec3 center() const { return (lo + hi) * 0.5; }
};

BoundingBox bounding_box(std::span<const Vec3> pts);

// Unit vector; norm is within 1e-12 of 1 after construction. Defaults to +z.
class Direction {
 public:
  Direction() : v_{0.0, 0.0, 1.0} {}
  explicit Direction(const Vec3& v);
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_;
};

struct Plane {
  Direction normal;
  double offset;  // plane = { x : <normal, x> = offset }

  double signed_distance(const Vec3& p) const { return dot(normal.vec(), p) - offset; }
  static Plane through(const Vec3& point, const Direction& n) {
    return Plane{n, dot(n.vec(), point)};
  }
};

struct SimplicityViolation {
  enum class Kind { edge_edge, vertex_edge };
  Kind kind;
  int a = -1;  // first edge, or the vertex for vertex_edge
  int b = -1;  // second edge
};

struct SimplicityReport {
  bool simple = false;
  std::optional<SimplicityViolation> first;
};

// Simplicity of a closed vertex cycle: no non-adjacent edge pair within eps of
// each other and no vertex within eps of a non-adjacent edge. Throws
// TooFewVertices / DegenerateEdge on malformed input; eps <= 0 derives the
// default from the candidate's bounding box.
SimplicityReport is_simple(std::span<const Vec3> vertices, double eps = 0.0);

// Validated simple closed polygonal curve in 3-space, vertex i joined to
// i+1 mod n. Immutable after construction; adjacent edges may be collinear.
class PolygonalKnot {
 public:
  static PolygonalKnot from_vertices(std::vector<Vec3> vertices, double eps = 0.0);

  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<Vec3>& vertices() const { return v_; }
  const Vec3& vertex(int i) const { return v_[wrap(i)]; }
  Vec3 edge_vector(int i) const { return vertex(i + 1) - vertex(i); }
  double edge_length(int i) const { return norm(edge_vector(i)); }
  Vec3 point_on_edge(int i, double t) const { return lerp(vertex(i), vertex(i + 1), t); }

  BoundingBox bbox() const { return bbox_; }
  double bbox_diagonal() const { return diag_; }
  double geom_eps() const { return kGeomEpsRel * diag_; }

  // Minimum separation that a vertex jitter must respect: the smaller of all
  // non-adjacent edge/edge distances and all vertex-to-nonincident-edge
  // distances. Displacing every vertex by less than half of it keeps the
  // curve simple and in the same isotopy class.
  double clearance() const;

  // Distance from p to the nearest point of the curve.
  double distance_to(const Vec3& p) const;

  bool operator==(const PolygonalKnot& o) const { return v_ == o.v_; }

 private:
  PolygonalKnot(std::vector<Vec3> v, BoundingBox box);
  int wrap(int i) const {
    const int n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }

  std::vector<Vec3> v_;
  BoundingBox bbox_;
  double diag_;
};

}  // namespace polyknot
