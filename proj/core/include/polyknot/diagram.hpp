#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyknot/knot.hpp"

namespace polyknot {

// One transversal double point of the projected curve. Arc ids refer to the
// over-strand decomposition: arcs run between consecutive under-passages.
struct DiagramCrossing {
  int edge_a = 0, edge_b = 0;  // knot edge indices, edge_a < edge_b
  double t_a = 0.0, t_b = 0.0;
  Vec2 position;
  double depth_a = 0.0, depth_b = 0.0;  // heights along the projection direction
  int over_edge = 0;                    // edge_a or edge_b, strictly larger depth
  int over_arc = -1;
  int under_in_arc = -1;   // arc arriving at the under-passage
  int under_out_arc = -1;  // arc leaving it
};

// A point where the curve passes a crossing, in knot order.
struct CrossingPassage {
  int crossing = 0;
  int edge = 0;
  double t = 0.0;
  bool under = false;
  int arc = -1;  // arc containing this passage (for under: the arc it ends)
};

struct DiagramFace {
  std::vector<int> node_cycle;   // arrangement node ids along the boundary
  std::vector<Vec2> polygon;     // their coordinates, same order
  double signed_area = 0.0;
  bool bounded = true;
  int color = -1;  // 0 = white, 1 = black
  std::vector<int> adjacent;     // neighboring face ids (deduplicated)
};

// Generic planar projection of a knot: crossings carry over/under from the
// depth along the projection direction; faces come from tracing the planar
// arrangement and satisfy faces = crossings + 2.
struct KnotDiagram {
  Direction direction;
  Vec3 frame_u, frame_v;          // orthonormal basis of the projection plane
  std::vector<Vec2> vertices;     // projected knot vertices
  std::vector<double> depths;
  std::vector<DiagramCrossing> crossings;
  std::vector<CrossingPassage> passages;  // sorted along the knot
  int arc_count = 1;
  std::vector<Vec2> nodes;        // knot vertex images then crossing points
  std::vector<DiagramFace> faces;
  int unbounded_face = -1;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
};

// Projects along u (or searches for a generic direction from the seed when u
// is absent, up to 64 draws). Throws NonGenericDirection naming the violating
// feature for an explicit u, NoGenericDirection when the search fails.
KnotDiagram build_diagram(const PolygonalKnot& knot, std::optional<Direction> u,
                          std::uint64_t seed, double eps = 0.0);

struct FaceColoring {
  std::vector<int> white_bounded_faces;
  std::vector<Vec2> white_interior_points;  // one representative per face above
  bool trivial_candidate = false;           // no bounded white face exists
};

// Validates the chessboard coloring (proper, unbounded face white) and
// returns an interior point for each bounded white face.
FaceColoring color_faces(const KnotDiagram& diagram);

struct Tricoloring {
  std::vector<int> arc_colors;  // one of {0,1,2} per arc
  bool uses_three_colors = false;
};

// Solves the crossing relations over GF(3): at every crossing the over and
// two under arc colors satisfy a+b+c = 0, i.e. all equal or all distinct.
// Returns a non-monochromatic coloring when one exists.
std::optional<Tricoloring> tricolorable(const KnotDiagram& diagram);

Vec2 project_point(const KnotDiagram& diagram, const Vec3& p);

}  // namespace polyknot
