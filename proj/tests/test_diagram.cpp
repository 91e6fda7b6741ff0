#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "fixtures.hpp"
#include "polyknot/curvature.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/rng.hpp"
#include "polyknot/svg.hpp"

using namespace polyknot;

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Independent crossing count: all-pairs 2D segment intersections of the
// projected polyline.
int oracle_crossing_count(const KnotDiagram& d) {
  const auto& q = d.vertices;
  const int n = static_cast<int>(q.size());
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int diff = j - i;
      if (diff <= 1 || diff == n - 1) continue;
      const Vec2 p = q[i], r = q[(i + 1) % n] - p;
      const Vec2 s = q[j], w = q[(j + 1) % n] - s;
      const double denom = cross(r, w);
      if (denom == 0.0) continue;
      const double t = cross(s - p, w) / denom;
      const double u = cross(s - p, r) / denom;
      if (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0) ++count;
    }
  return count;
}

// GF(3) nullity of the crossing relation matrix, by an elimination that
// sweeps rows bottom-up (independent of the solver's order).
int oracle_tricolor_nullity(const KnotDiagram& d) {
  const int arcs = d.arc_count;
  const int c = d.crossing_count();
  if (c == 0) return arcs;
  std::vector<std::vector<int>> m(c, std::vector<int>(arcs, 0));
  for (int i = 0; i < c; ++i) {
    const auto& cr = d.crossings[i];
    m[i][cr.over_arc] = (m[i][cr.over_arc] + 1) % 3;
    m[i][cr.under_in_arc] = (m[i][cr.under_in_arc] + 1) % 3;
    m[i][cr.under_out_arc] = (m[i][cr.under_out_arc] + 1) % 3;
  }
  int rank = 0;
  std::vector<bool> used(c, false);
  for (int col = arcs - 1; col >= 0; --col) {
    int pivot = -1;
    for (int r = c - 1; r >= 0; --r)
      if (!used[r] && m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    used[pivot] = true;
    ++rank;
    for (int r = 0; r < c; ++r) {
      if (r == pivot || m[r][col] == 0) continue;
      const int f = (m[r][col] * (m[pivot][col] == 1 ? 1 : 2)) % 3;
      for (int k = 0; k < arcs; ++k) m[r][k] = ((m[r][k] - f * m[pivot][k]) % 3 + 3) % 3;
    }
  }
  return arcs - rank;
}

void check_chessboard(const KnotDiagram& d) {
  CHECK(d.faces[d.unbounded_face].color == 0);
  for (int f = 0; f < d.face_count(); ++f)
    for (int g : d.faces[f].adjacent) CHECK(d.faces[f].color != d.faces[g].color);
}

}  // namespace

TEST_CASE("a planar square projects to a 2-face diagram") {
  const auto d = build_diagram(fixtures::square(), Direction({0, 0, 1}), 0);
  CHECK(d.crossing_count() == 0);
  CHECK(d.face_count() == 2);
  CHECK(d.arc_count == 1);
  const auto fc = color_faces(d);
  CHECK(fc.white_bounded_faces.empty());
  CHECK(fc.trivial_candidate);
}

TEST_CASE("the trefoil along its axis has 3 crossings and 5 faces") {
  const auto knot = fixtures::trefoil();
  const auto d = build_diagram(knot, Direction({0, 0, 1}), 0);
  CHECK(d.crossing_count() == 3);
  CHECK(d.face_count() == 5);
  CHECK(d.crossing_count() == oracle_crossing_count(d));
  CHECK(d.face_count() == d.crossing_count() + 2);
  check_chessboard(d);
  // Over/under margins clear the guard band.
  for (const auto& c : d.crossings) {
    CHECK(std::abs(c.depth_a - c.depth_b) > knot.geom_eps());
    CHECK((c.over_edge == c.edge_a ? c.depth_a : c.depth_b) >
          (c.over_edge == c.edge_a ? c.depth_b : c.depth_a));
  }
}

TEST_CASE("the bounded white face point sees the projection with angular length >= 4pi") {
  const auto knot = fixtures::trefoil();
  const auto d = build_diagram(knot, Direction({0, 0, 1}), 0);
  const auto fc = color_faces(d);
  REQUIRE(fc.white_interior_points.size() == 1);
  std::vector<Vec3> flat;
  for (const Vec2& p : d.vertices) flat.push_back({p.x, p.y, 0});
  const double phi_proj = total_curvature(flat, true).total;
  for (const Vec2& o2 : fc.white_interior_points) {
    const double psi = angular_length(flat, Vec3{o2.x, o2.y, 0});
    CHECK(psi >= kFourPi - 1e-9);
    CHECK(psi <= phi_proj + 1e-9);
  }
}

TEST_CASE("a direction parallel to an edge is rejected by name") {
  const auto knot = fixtures::trefoil();
  CHECK_THROWS_WITH_AS(build_diagram(knot, Direction(knot.edge_vector(0)), 0),
                       doctest::Contains("NonGenericDirection"), Error);
}

TEST_CASE("searched directions produce valid diagrams on varied knots") {
  int built = 0;
  for (int s = 0; s < 50; ++s) {
    const auto knot = (s % 2 == 0) ? generate_random_closed({10 + s % 5}, 500 + s)
                                   : generate_scrambled_unknot({30 + s}, 800 + s);
    const auto d = build_diagram(knot, std::nullopt, 1000 + s);
    CHECK(d.face_count() == d.crossing_count() + 2);
    CHECK(d.crossing_count() == oracle_crossing_count(d));
    check_chessboard(d);
    ++built;
  }
  CHECK(built == 50);
}

TEST_CASE("the trefoil diagram is tricolorable with all three colors") {
  const auto d = build_diagram(fixtures::trefoil(), Direction({0, 0, 1}), 0);
  const auto tri = tricolorable(d);
  REQUIRE(tri.has_value());
  CHECK(tri->uses_three_colors);
  // Crossing relations: all equal or all distinct.
  for (const auto& c : d.crossings) {
    const int a = tri->arc_colors[c.over_arc];
    const int b = tri->arc_colors[c.under_in_arc];
    const int cc = tri->arc_colors[c.under_out_arc];
    CHECK((a + b + cc) % 3 == 0);
  }
  CHECK(oracle_tricolor_nullity(d) >= 2);
}

TEST_CASE("crossing-free and unknot diagrams are never tricolorable") {
  const auto square_d = build_diagram(fixtures::square(), Direction({0, 0, 1}), 0);
  CHECK_FALSE(tricolorable(square_d).has_value());
  for (int s = 0; s < 10; ++s) {
    const auto knot = generate_scrambled_unknot({40 + 3 * s}, 300 + s);
    const auto d = build_diagram(knot, std::nullopt, 40 + s);
    CHECK_FALSE(tricolorable(d).has_value());
    if (d.crossing_count() > 0) CHECK(oracle_tricolor_nullity(d) == 1);
  }
}

TEST_CASE("svg of a crossing-free diagram is a single closed path") {
  const auto d = build_diagram(fixtures::square(), Direction({0, 0, 1}), 0);
  const std::string svg = render_svg(d);
  size_t paths = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++paths;
    ++pos;
  }
  CHECK(paths == 1);
  CHECK(svg.find(" Z\"") != std::string::npos);
}

TEST_CASE("svg of the trefoil has six visible strand pieces") {
  const auto d = build_diagram(fixtures::trefoil(), Direction({0, 0, 1}), 0);
  const std::string svg = render_svg(d);
  size_t paths = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++paths;
    ++pos;
  }
  CHECK(paths == 6);
}

TEST_CASE("svg face filling paints crossings+2 regions") {
  const auto d = build_diagram(fixtures::trefoil(), Direction({0, 0, 1}), 0);
  SvgStyle style;
  style.fill_faces = true;
  const std::string svg = render_svg(d, style);
  size_t fills = 0, pos = 0;
  while ((pos = svg.find("fill=\"#", pos)) != std::string::npos) {
    ++fills;
    ++pos;
  }
  // Background rectangle for the unbounded face + one path per bounded face
  // + the basepoint marker when present.
  CHECK(fills >= 5);
  size_t rects = svg.find("<rect") != std::string::npos ? 1 : 0;
  CHECK(rects == 1);
}

TEST_CASE("svg output is deterministic") {
  const auto d = build_diagram(fixtures::trefoil(), Direction({0, 0, 1}), 0);
  CHECK(render_svg(d) == render_svg(d));
}

TEST_CASE("tricolorability is independent of the projection direction") {
  // Knot invariant: every generic diagram of the trefoil is tricolorable,
  // no diagram of the figure-eight or cinquefoil ever is.
  const auto tre = fixtures::trefoil();
  const auto fig8 = fixtures::figure_eight();
  const auto c5 = fixtures::cinquefoil();
  int tre_checked = 0, neg_checked = 0;
  for (int s = 0; s < 5; ++s) {
    {
      const auto d = build_diagram(tre, Direction(rng::unit_sphere(rng::key(1234, s))), 0);
      const auto tri = tricolorable(d);
      REQUIRE(tri.has_value());
      CHECK(tri->uses_three_colors);
      ++tre_checked;
    }
    for (const auto* knot : {&fig8, &c5}) {
      try {
        const auto d = build_diagram(*knot, Direction(rng::unit_sphere(rng::key(5678, s))), 0);
        CHECK_FALSE(tricolorable(d).has_value());
        ++neg_checked;
      } catch (const Error&) {
        // non-generic draw; skip
      }
    }
  }
  CHECK(tre_checked == 5);
  CHECK(neg_checked >= 8);
}
