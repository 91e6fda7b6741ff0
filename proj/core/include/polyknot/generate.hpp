#pragma once

#include <cstdint>

#include "polyknot/knot.hpp"

namespace polyknot {

struct ConvexNgonParams {
  int n = 4;
  double radius = 1.0;
};

struct TorusKnotParams {
  int p = 2;
  int q = 3;
  int samples = 60;
  double R = 2.0;
  double r = 1.0;
};

struct RandomClosedParams {
  int n = 12;
};

struct ScrambledUnknotParams {
  int steps = 100;
};

PolygonalKnot generate_convex_ngon(const ConvexNgonParams& params);

// ((R + r cos qt) cos pt, (R + r cos qt) sin pt, r sin qt) at `samples`
// equally spaced parameters.
PolygonalKnot generate_torus_knot(const TorusKnotParams& params);

// Closed random walk (mean displacement subtracted), retried until simple.
PolygonalKnot generate_random_closed(const RandomClosedParams& params, std::uint64_t seed);

// Triangle scrambled by `steps` random triangular isotopies: always an
// unknot, usually a tangled one.
PolygonalKnot generate_scrambled_unknot(const ScrambledUnknotParams& params, std::uint64_t seed);

}  // namespace polyknot
