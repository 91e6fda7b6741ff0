#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "polyknot/knot.hpp"

namespace polyknot {

// One triangular isotopy. "add" replaces edge [index, index+1] by the two
// edges through the apex point; "remove" deletes vertex index, replacing its
// two edges by the chord. The evidence triangle is the solid triangle that
// must meet the pre-move curve only along the replaced edge(s).
struct IsotopyMove {
  enum class Kind { add, remove };
  Kind kind = Kind::add;
  int index = 0;
  Vec3 point;                    // apex (add) or the removed vertex (remove)
  std::array<Vec3, 3> evidence;  // {p, q, apex} for add, {prev, removed, next} for remove
};

struct MoveSequence {
  PolygonalKnot initial;
  std::vector<IsotopyMove> moves;
  PolygonalKnot final;
};

// Applies one move after re-verifying the empty-triangle condition against
// the given knot. Throws BlockedTriangle (with the offending edge index in
// detail()) when another strand meets the solid triangle, DegenerateTriangle
// when a zero-area move cannot satisfy the incidence conditions.
PolygonalKnot apply_move(const PolygonalKnot& knot, const IsotopyMove& move, double eps = 0.0);

// True when removing vertex v is a legal move; blocking edge reported if not.
bool remove_is_legal(const PolygonalKnot& knot, int v, double eps = 0.0, int* blocking_edge = nullptr);
bool add_is_legal(const PolygonalKnot& knot, int edge, const Vec3& apex, double eps = 0.0,
                  int* blocking_edge = nullptr);

IsotopyMove make_remove(const PolygonalKnot& knot, int v);
IsotopyMove make_add(const PolygonalKnot& knot, int edge, const Vec3& apex);

// Unknotting along a height direction with a single local maximum and
// pairwise-distinct vertex heights: repeatedly removes the middle of the
// three highest vertices, which are always consecutive. Produces exactly
// n-3 remove moves ending in a triangle.
MoveSequence unknot_by_height(const PolygonalKnot& knot, const Direction& u, double eps = 0.0);

// Removes the first vertex (in cyclic order from a rotating start) whose
// solid triangle is empty, until a triangle is reached, no vertex qualifies,
// or the move budget runs out. Reaching a triangle certifies triviality;
// stalling proves nothing.
std::pair<PolygonalKnot, MoveSequence> greedy_simplify(const PolygonalKnot& knot, long budget,
                                                       double eps = 0.0);

// Applies `steps` random legal moves (adds with apexes sampled near edge
// midpoints, removes once the curve has grown past its initial size). The
// output is isotopic to the input by construction and deterministic per seed.
std::pair<PolygonalKnot, MoveSequence> scramble(const PolygonalKnot& knot, int steps,
                                                std::uint64_t seed, double eps = 0.0);

// Move-by-move inverse (add <-> remove); replaying it undoes the sequence.
MoveSequence invert(const MoveSequence& seq);

// Replays moves from seq.initial, checking legality and simplicity at every
// step; throws if the recorded final knot is not reproduced.
PolygonalKnot replay(const MoveSequence& seq, double eps = 0.0);

}  // namespace polyknot
