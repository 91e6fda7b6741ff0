#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "polyknot/curvature.hpp"
#include "polyknot/quadrisecant.hpp"
#include "polyknot/rng.hpp"

using namespace polyknot;

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double point_line_distance(const Vec3& p, const Line3& l) {
  return norm(cross(p - l.point, l.dir));
}

// Enumerate all rotations and reflections of the knot-order word explicitly.
QuadOrderType oracle_order(const QuadrisecantRecord& rec) {
  std::array<int, 4> word{0, 1, 2, 3};
  std::sort(word.begin(), word.end(), [&](int a, int b) {
    return rec.hits[a].edge + rec.hits[a].t < rec.hits[b].edge + rec.hits[b].t;
  });
  auto matches = [&](std::array<int, 4> target) {
    for (int rot = 0; rot < 4; ++rot) {
      std::array<int, 4> w = word;
      std::rotate(w.begin(), w.begin() + rot, w.end());
      if (w == target) return true;
      std::reverse(w.begin(), w.end());
      std::rotate(w.begin(), w.begin() + 3, w.end());
      if (w == target) return true;
      std::array<int, 4> rev{word[3], word[2], word[1], word[0]};
      std::rotate(rev.begin(), rev.begin() + rot, rev.end());
      if (rev == target) return true;
    }
    return false;
  };
  if (matches({0, 2, 1, 3})) return QuadOrderType::alternating;
  if (matches({0, 1, 3, 2})) return QuadOrderType::flipped;
  return QuadOrderType::simple;
}

}  // namespace

TEST_CASE("a common transversal is recovered from four lines built to meet it") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Line3 target{rng::gaussian3(rng::key(seed, 1)),
                       normalized(rng::gaussian3(rng::key(seed, 2)))};
    std::array<Line3, 4> lines;
    const double params[4] = {-2.0, -0.5, 1.0, 2.7};
    for (int k = 0; k < 4; ++k) {
      const Vec3 anchor = target.point + params[k] * target.dir;
      const Vec3 dir = normalized(rng::gaussian3(rng::key(seed, 3, k)));
      lines[k] = {anchor - 1.5 * dir, dir};
    }
    const auto res = transversals_of_4_lines(lines);
    REQUIRE_FALSE(res.degenerate);
    bool recovered = false;
    for (const auto& sol : res.lines) {
      const double angle = norm(cross(sol.line.dir, target.dir));
      if (angle < 1e-7 && point_line_distance(sol.line.point, target) < 1e-9 * 10) recovered = true;
      CHECK(sol.residual < 1e-9);
    }
    CHECK(recovered);
    CHECK(res.lines.size() <= 2);
  }
}

TEST_CASE("four concurrent lines are flagged degenerate") {
  const Vec3 apex{0.3, -0.4, 1.1};
  std::array<Line3, 4> lines;
  for (int k = 0; k < 4; ++k) {
    const Vec3 dir = normalized(rng::gaussian3(rng::key(5, k)));
    lines[k] = {apex - dir, dir};
  }
  const auto res = transversals_of_4_lines(lines);
  CHECK(res.degenerate);
  CHECK(res.lines.empty());
}

TEST_CASE("random line quadruples give at most two clean transversals") {
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    std::array<Line3, 4> lines;
    for (int k = 0; k < 4; ++k)
      lines[k] = {rng::gaussian3(rng::key(seed, k, 1)),
                  normalized(rng::gaussian3(rng::key(seed, k, 2)))};
    const auto res = transversals_of_4_lines(lines);
    if (res.degenerate) continue;
    CHECK(res.lines.size() <= 2);
    for (const auto& sol : res.lines) {
      for (const auto& l : lines) {
        // Independent incidence check: closest distance between the lines.
        const Vec3 n = cross(l.dir, sol.line.dir);
        const double d = norm(n) > 1e-12 ? std::abs(dot(l.point - sol.line.point, n)) / norm(n)
                                         : point_line_distance(l.point, sol.line);
        CHECK(d < 1e-8);
      }
    }
  }
}

TEST_CASE("convex planar polygons admit no quadrisecants") {
  for (int n : {8, 12, 30}) {
    const auto scan = find_quadrisecants(fixtures::ngon(n));
    CHECK(scan.records.empty());
  }
}

TEST_CASE("the trefoil admits alternating quadrisecants with 4pi quadrangles") {
  const auto knot = fixtures::trefoil();
  const double phi = total_curvature(knot).total;
  const auto scan = find_quadrisecants(knot);
  long alternating = 0;
  for (const auto& rec : scan.records) {
    // Soundness: independent residual check and strictly interior hits.
    for (const auto& hit : rec.hits) {
      CHECK(point_line_distance(hit.point, rec.line) <= 1e-7 * knot.bbox_diagonal());
      CHECK(hit.t > 0.0);
      CHECK(hit.t < 1.0);
    }
    for (int k = 1; k < 4; ++k) CHECK(rec.hits[k].s >= rec.hits[k - 1].s);
    CHECK(rec.order == oracle_order(rec));
    if (rec.order != QuadOrderType::alternating) continue;
    ++alternating;
    std::array<QuadHit, 4> hits = rec.hits;
    std::sort(hits.begin(), hits.end(),
              [](const QuadHit& a, const QuadHit& b) { return a.edge + a.t < b.edge + b.t; });
    std::vector<InscribeMark> marks;
    for (const auto& h : hits) marks.push_back({h.edge, h.t});
    const double quad_phi = total_curvature(inscribe(knot, marks), true).total;
    CHECK(std::abs(quad_phi - kFourPi) < 1e-9);
    CHECK(quad_phi <= phi + 1e-9);
  }
  CHECK(alternating >= 1);
}

TEST_CASE("the alternating filter returns only alternating records") {
  const auto scan = find_quadrisecants(fixtures::trefoil(), QuadFilter::alternating);
  CHECK_FALSE(scan.records.empty());
  for (const auto& rec : scan.records) CHECK(rec.order == QuadOrderType::alternating);
}

TEST_CASE("the scan is capped at 200 edges") {
  const auto big = generate_torus_knot({2, 3, 201, 2.0, 1.0});
  CHECK_THROWS_WITH_AS(find_quadrisecants(big), doctest::Contains("KnotTooLarge"), Error);
}
