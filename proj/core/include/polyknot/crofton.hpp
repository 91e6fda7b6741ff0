#pragma once

#include <cstdint>
#include <optional>

#include "polyknot/isotopy.hpp"
#include "polyknot/knot.hpp"

namespace polyknot {

// Spherical lune of directions whose height function peaks at vertex i; its
// area equals twice the external angle there.
struct SliceRegion {
  int vertex = 0;
  Direction in_dir;   // unit vector along the incoming edge
  Direction out_dir;  // unit vector along the outgoing edge
  double external_angle = 0.0;
  double area = 0.0;  // = 2 * external_angle
};

enum class CroftonMode { plane_projection, line_projection };
const char* crofton_mode_name(CroftonMode m);

struct CroftonEstimate {
  CroftonMode mode;
  int samples = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double stderr_mean = 0.0;
  long redraws = 0;  // directions rejected for failing general position
};

// Number of strict local maxima of the height <u, .> over the vertex cycle.
// Throws TiedHeights when two vertex heights coincide within eps; ties are
// never broken silently.
int local_maxima_count(const PolygonalKnot& knot, const Direction& u, double eps = 0.0);

SliceRegion slice_area(const PolygonalKnot& knot, int vertex);

// Monte Carlo average over uniform directions of the total curvature of the
// projected curve: onto the plane u-perp (project and sum external angles) or
// onto the line along u (pi times the number of strict height extrema).
CroftonEstimate crofton_estimate(const PolygonalKnot& knot, CroftonMode mode, int samples,
                                 std::uint64_t seed, double eps = 0.0);

// Direction with a single height maximum plus the unknotting move sequence it
// certifies. Absence proves nothing.
struct BridgeCertificate {
  Direction direction;
  MoveSequence moves;
};

// Scans `budget` directions: a Fibonacci lattice sweep, refinement around the
// lowest-count candidates, then random draws. On success the certificate's
// moves end in a triangle.
std::optional<BridgeCertificate> bridge_certificate(const PolygonalKnot& knot, int budget,
                                                    std::uint64_t seed, double eps = 0.0);

// Mean count of height maxima over `samples` uniform directions, with the
// standard error of the mean; ties are resampled.
struct MaximaSample {
  double mean = 0.0;
  double stderr_mean = 0.0;
  long redraws = 0;
};
MaximaSample sample_mean_maxima(const PolygonalKnot& knot, int samples, std::uint64_t seed,
                                double eps = 0.0);

}  // namespace polyknot
