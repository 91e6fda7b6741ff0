#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "polyknot/curvature.hpp"
#include "polyknot/knot.hpp"

namespace polyknot {

struct CrossingQuery {
  Plane plane;
  int count = 0;          // transversal crossings; always even
  bool perturbed = false; // offset was nudged off incident vertices
};

// Transversal crossings of the knot with the plane. When a vertex lies on the
// plane within eps, the offset is nudged to both sides and the larger generic
// count is returned with the perturbed flag set (the upper-semicontinuous
// extension, taken one-sidedly).
CrossingQuery plane_crossing_number(const PolygonalKnot& knot, const Plane& plane,
                                    double eps = 0.0);

struct HullWitness {
  Vec3 point;
  enum class Verdict { outside, inside_sampled } verdict = Verdict::outside;
  std::optional<CrossingQuery> witness_plane;  // count <= 2, for outside
  long planes_tested = 0;
  int min_count = 0;
  std::uint64_t seed = 0;
};

// Membership probe for the second hull: first every plane through x and two
// knot vertices (the critical planes where the count can change), tilted into
// the four adjacent chambers, then `budget` random planes through x. The
// first plane crossing the knot at most twice certifies "outside";
// "inside-sampled" is evidence, not proof.
HullWitness in_second_hull(const PolygonalKnot& knot, const Vec3& x, int budget,
                           std::uint64_t seed, double eps = 0.0);

// Center-outward scan of a resolution^3 grid over the knot's bounding box for
// a point whose probe reports inside-sampled.
std::optional<std::pair<Vec3, HullWitness>> second_hull_witness(const PolygonalKnot& knot,
                                                                int resolution, int budget,
                                                                std::uint64_t seed,
                                                                double eps = 0.0);

struct SphericalCroftonResult {
  double length = 0.0;            // sum of arc angles
  double pi_mean_crossings = 0.0; // pi times the mean equator-crossing count
  double stderr_mean = 0.0;       // standard error of pi * mean
  long redraws = 0;
};

// Samples N uniform equator normals and counts transversal crossings of the
// spherical polyline with each equator; ties are resampled. The two returned
// quantities agree within sampling error.
SphericalCroftonResult spherical_crofton_check(const SphericalPolyline& curve, int samples,
                                               std::uint64_t seed);

}  // namespace polyknot
