#pragma once

#include <span>
#include <vector>

#include "polyknot/knot.hpp"

namespace polyknot {

// Per-vertex external angles (each in [0, pi]) and their sum.
struct AngleProfile {
  std::vector<double> external_angles;
  double total = 0.0;
};

// External angle at each vertex of a polygonal curve: pi minus the interior
// angle, computed as the turn between consecutive edge vectors. For open
// polylines only interior vertices carry an angle; endpoints contribute 0.
// Collinear adjacent edges contribute exactly 0.
AngleProfile total_curvature(std::span<const Vec3> pts, bool closed, double eps = 0.0);
AngleProfile total_curvature(const PolygonalKnot& knot);

// Angular length with respect to a basepoint: the sum of angles subtended at
// o by the edges of the closed curve. Throws PointOnCurve when o is within
// eps of the curve.
double angular_length(std::span<const Vec3> pts, const Vec3& o, double eps = 0.0);
double angular_length(const PolygonalKnot& knot, const Vec3& o, double eps = 0.0);

// Closed or open chain of minor great-circle arcs on the unit sphere.
struct SphericalPolyline {
  std::vector<Vec3> vertices;  // unit vectors
  bool closed = true;

  double length() const;  // sum of arc angles
};

// Radial projection of the knot to the unit sphere centered at o. Throws
// PointOnCurve when o is within eps of the curve and AntipodalEdge when an
// edge subtends an angle too close to pi for a well-defined minor arc.
SphericalPolyline radial_projection(const PolygonalKnot& knot, const Vec3& o, double eps = 0.0);

struct InscribeMark {
  int edge = 0;
  double t = 0.0;  // position within the edge, in [0, 1]
};

// Closed polyline through the marked points of the knot, in the given order.
// Marks must be cyclically ordered along the knot (one wrap allowed) and
// number at least 3. The result need not be simple.
std::vector<Vec3> inscribe(const PolygonalKnot& knot, std::span<const InscribeMark> marks);

// Area of (infinite cone over the knot with tip o) ∩ (ball of radius r at o),
// divided by r^2, via radial-strip triangulation of each cone panel. Tends to
// half the angular length; exact for flat panels up to the strip refinement.
double cone_ball_area_ratio(const PolygonalKnot& knot, const Vec3& o, double r, double eps = 0.0);

}  // namespace polyknot
