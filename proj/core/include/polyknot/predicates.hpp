#pragma once

#include <array>

#include "polyknot/vec.hpp"

// Distance-based geometric predicates in double precision. Queries inside an
// epsilon guard band are reported as incidences/violations by the callers; the
// pipeline's answer to near-degeneracy is perturbation, not exact arithmetic.

namespace polyknot {

double orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

Vec3 closest_point_on_segment(const Vec3& p, const Vec3& a, const Vec3& b, double* t = nullptr);
double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

// Closest pair of points between segments [p1,q1] and [p2,q2].
double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2,
                                double* s = nullptr, double* t = nullptr, Vec3* c1 = nullptr,
                                Vec3* c2 = nullptr);

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);
double point_triangle_distance(const Vec3& p, const std::array<Vec3, 3>& tri);

// Distance from segment [a,b] to the closed solid triangle; zero when the
// segment pierces the interior. tri_witness receives the closest point on the
// triangle side.
double segment_triangle_distance(const Vec3& a, const Vec3& b, const std::array<Vec3, 3>& tri,
                                 Vec3* tri_witness = nullptr);

// Representative points of the contact set between segment [a,b] and the
// closed solid triangle, within guard band eps. Handles transversal piercing,
// coplanar overlap (returns the clipped sub-segment's endpoints and midpoint)
// and zero-area triangles. Returns the number of points written to out.
int segment_triangle_contacts(const Vec3& a, const Vec3& b, const std::array<Vec3, 3>& tri,
                              double eps, std::array<Vec3, 4>& out);

}  // namespace polyknot
