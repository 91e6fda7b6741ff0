#pragma once

#include <array>
#include <vector>

#include "polyknot/knot.hpp"

namespace polyknot {

struct Line3 {
  Vec3 point;
  Vec3 dir;  // unit
};

struct TransversalSolution {
  Line3 line;
  double residual = 0.0;  // max distance from the line to the four inputs
};

struct TransversalResult {
  std::vector<TransversalSolution> lines;  // at most 2
  bool degenerate = false;                 // infinite transversal family
};

// All common transversals of four lines. A transversal through the point of
// l1 at parameter t must lie in the planes spanned with l2 and l3; requiring
// incidence with l4 reduces to a quadratic in t (the cubic term cancels
// identically). Roots are polished by one Newton step. Configurations with
// infinitely many transversals (coplanar or concurrent inputs) set the
// degenerate flag and return nothing.
TransversalResult transversals_of_4_lines(const std::array<Line3, 4>& lines);

enum class QuadOrderType { alternating, simple, flipped };
const char* quad_order_name(QuadOrderType t);

struct QuadHit {
  int edge = 0;
  double t = 0.0;   // parameter within the edge
  Vec3 point;
  double s = 0.0;   // parameter along the secant line
};

struct QuadrisecantRecord {
  Line3 line;
  std::array<QuadHit, 4> hits;  // sorted by s
  QuadOrderType order = QuadOrderType::simple;
  double residual = 0.0;        // max distance from a hit point to the line
};

enum class QuadFilter { all, alternating };

struct QuadrisecantScan {
  std::vector<QuadrisecantRecord> records;
  long degenerate_tuples = 0;  // 4-tuples with an infinite transversal family
  long endpoint_skips = 0;     // solutions discarded for hitting near a vertex
};

// Exhaustive scan over all 4-subsets of edges: solve the common-transversal
// quadratic of the supporting lines, keep solutions whose hit parameters are
// strictly interior on all four segments, classify the cyclic order, and
// deduplicate nearly identical lines. The O(n^4) sweep refuses knots with
// more than max_edges edges (default 200).
QuadrisecantScan find_quadrisecants(const PolygonalKnot& knot,
                                    QuadFilter filter = QuadFilter::all, int max_edges = 200);

// Cyclic order type of four collinear hits: how the knot-order permutation of
// the s-sorted labels interleaves.
QuadOrderType classify_order(const std::array<QuadHit, 4>& hits_sorted_by_s, int knot_size);

}  // namespace polyknot
