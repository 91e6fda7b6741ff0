#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyknot/knot.hpp"

namespace polyknot {

enum class GpMode {
  distinct_heights,    // all vertex heights along u pairwise distinct
  no_four_coplanar,    // no four vertices within eps of a common plane
  generic_projection,  // projection along u has only clean transversal double points
};

const char* gp_mode_name(GpMode m);

struct GeneralPositionReport {
  GpMode mode;
  bool pass = false;
  // Violating index tuples: vertex pairs, vertex quadruples, or edge/vertex
  // tuples depending on the mode.
  std::vector<std::vector<int>> violations;
};

// u is required for distinct_heights and generic_projection (MissingDirection
// otherwise). The report lists every violation found within eps.
GeneralPositionReport check_general_position(const PolygonalKnot& knot, GpMode mode,
                                             std::optional<Direction> u = std::nullopt,
                                             double eps = 0.0);

// Moves each vertex independently by a uniform offset in [-magnitude,
// magnitude] per coordinate, keyed by (seed, vertex, coordinate). Requires
// magnitude < clearance/2 so the result stays simple and isotopic.
PolygonalKnot perturb(const PolygonalKnot& knot, double magnitude, std::uint64_t seed);

// Default genericity jitter: magnitude 1e-6 of the bounding-box diagonal,
// retried with fresh sub-seeds (up to 32) until no four vertices are
// coplanar. Returns the input unchanged when it is already generic.
PolygonalKnot make_generic(const PolygonalKnot& knot, std::uint64_t seed);

}  // namespace polyknot
