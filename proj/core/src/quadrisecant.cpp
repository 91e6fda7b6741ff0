#include "polyknot/quadrisecant.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace polyknot {

const char* quad_order_name(QuadOrderType t) {
  switch (t) {
    case QuadOrderType::alternating: return "alternating";
    case QuadOrderType::simple: return "simple";
    case QuadOrderType::flipped: return "flipped";
  }
  return "?";
}

namespace {

double line_point_distance(const Line3& l, const Vec3& p) {
  return norm(cross(p - l.point, l.dir));
}

double line_line_distance(const Line3& l, const Vec3& a, const Vec3& d) {
  const Vec3 n = cross(d, l.dir);
  const double nn = norm(n);
  if (nn <= 1e-12 * norm(d)) return line_point_distance(l, a);  // parallel
  return std::abs(dot(a - l.point, n)) / nn;
}

struct Quadratic {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double scale = 1.0;      // coefficient magnitude of a generic input (length^6)
  double len_scale = 1.0;  // characteristic length of the input

  double eval(double t) const { return c0 + t * (c1 + t * c2); }
  double deriv(double t) const { return c1 + 2.0 * t * c2; }
};

// Transversal candidates through the point a1 + t*d1 get their direction from
// the pencil planes spanned with l2 and l3:
//   n2(t) = (a2 - p(t)) x d2 = A2 - t*B2,   n3(t) analogous,
//   w(t)  = n2 x n3 = W0 + t*W1 + t^2*W2.
// Meeting l4 means det[a4 - p(t), d4, w(t)] = 0. The cubic coefficient is
// -det[d1, d4, W2] with W2 = (d1 x d2) x (d1 x d3) = det[d1,d2,d3] * d1, which
// vanishes identically, leaving a quadratic in t.
struct Pencil {
  Vec3 a1, d1;
  Vec3 W0, W1, W2;
  Quadratic q;
};

Pencil make_pencil(const std::array<Line3, 4>& l) {
  Pencil p;
  p.a1 = l[0].point;
  p.d1 = l[0].dir;
  const Vec3 A2 = cross(l[1].point - p.a1, l[1].dir);
  const Vec3 B2 = cross(p.d1, l[1].dir);
  const Vec3 A3 = cross(l[2].point - p.a1, l[2].dir);
  const Vec3 B3 = cross(p.d1, l[2].dir);
  p.W0 = cross(A2, A3);
  p.W1 = (cross(A2, B3) + cross(B2, A3)) * -1.0;
  p.W2 = cross(B2, B3);

  const Vec3 u = l[3].point - p.a1;
  const Vec3& d4 = l[3].dir;
  p.q.c0 = det3(u, d4, p.W0);
  p.q.c1 = det3(u, d4, p.W1) - det3(p.d1, d4, p.W0);
  p.q.c2 = det3(u, d4, p.W2) - det3(p.d1, d4, p.W1);

  double s = std::max({norm(u), norm(l[1].point - p.a1), norm(l[2].point - p.a1), 1e-30});
  s = std::max({s, norm(p.d1), norm(l[1].dir), norm(l[2].dir), norm(d4)});
  p.q.len_scale = s;
  p.q.scale = s * s * s * s * s * s;
  return p;
}

Vec3 pencil_dir(const Pencil& p, double t) { return p.W0 + t * p.W1 + (t * t) * p.W2; }

}  // namespace

TransversalResult transversals_of_4_lines(const std::array<Line3, 4>& lines) {
  TransversalResult out;
  const Pencil p = make_pencil(lines);
  const double tol = 1e-12 * p.q.scale;

  std::array<double, 2> roots{};
  int n_roots = 0;
  if (std::abs(p.q.c2) <= tol) {
    if (std::abs(p.q.c1) <= tol) {
      if (std::abs(p.q.c0) <= tol) {
        out.degenerate = true;  // identically satisfied: infinite family
        return out;
      }
      return out;  // no transversal through finite points of l1
    }
    roots[n_roots++] = -p.q.c0 / p.q.c1;
  } else {
    const double disc = p.q.c1 * p.q.c1 - 4.0 * p.q.c0 * p.q.c2;
    if (disc < 0.0) return out;
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (p.q.c1 + (p.q.c1 >= 0.0 ? sq : -sq));
    roots[n_roots++] = qq / p.q.c2;
    if (std::abs(qq) > 0.0) roots[n_roots++] = p.q.c0 / qq;
  }

  const double s4 = p.q.len_scale * p.q.len_scale * p.q.len_scale * p.q.len_scale;
  const double dir_tol = 1e-12 * s4;  // w(t) carries length^4
  for (int r = 0; r < n_roots; ++r) {
    double t = roots[r];
    if (!std::isfinite(t)) continue;
    const double dg = p.q.deriv(t);
    if (std::abs(dg) > 0.0) t -= p.q.eval(t) / dg;  // one polishing step

    const Vec3 w = pencil_dir(p, t);
    if (norm(w) <= dir_tol) continue;  // pencil planes coincide at this root
    Line3 line{p.a1 + t * p.d1, normalized(w)};
    double res = 0.0;
    for (const Line3& l : lines) res = std::max(res, line_line_distance(line, l.point, l.dir));
    // Avoid returning the same double root twice.
    bool dup = false;
    for (const auto& sol : out.lines) {
      if (norm(cross(sol.line.dir, line.dir)) < 1e-10 &&
          line_point_distance(sol.line, line.point) < 1e-10 * (1.0 + norm(line.point)))
        dup = true;
    }
    if (!dup) out.lines.push_back({line, res});
  }
  return out;
}

QuadOrderType classify_order(const std::array<QuadHit, 4>& hits, int knot_size) {
  (void)knot_size;
  // Label hits 0..3 by line order; read the labels in knot order and
  // normalize the cyclic word to start at 0, in both traversal directions.
  std::array<int, 4> by_knot{0, 1, 2, 3};
  std::sort(by_knot.begin(), by_knot.end(), [&](int a, int b) {
    return hits[a].edge + hits[a].t < hits[b].edge + hits[b].t;
  });
  auto normalize = [](std::array<int, 4> w) {
    while (w[0] != 0) std::rotate(w.begin(), w.begin() + 1, w.end());
    return w;
  };
  const std::array<int, 4> fwd = normalize(by_knot);
  std::array<int, 4> rev{by_knot[3], by_knot[2], by_knot[1], by_knot[0]};
  const std::array<int, 4> bwd = normalize(rev);

  auto type_of = [](const std::array<int, 4>& w) -> std::optional<QuadOrderType> {
    if (w == std::array<int, 4>{0, 1, 2, 3}) return QuadOrderType::simple;
    if (w == std::array<int, 4>{0, 2, 1, 3}) return QuadOrderType::alternating;
    if (w == std::array<int, 4>{0, 1, 3, 2}) return QuadOrderType::flipped;
    return std::nullopt;
  };
  if (auto t = type_of(fwd)) return *t;
  if (auto t = type_of(bwd)) return *t;
  return QuadOrderType::flipped;  // unreachable for 4 distinct positions
}

QuadrisecantScan find_quadrisecants(const PolygonalKnot& knot, QuadFilter filter,
                                    int max_edges) {
  const int n = knot.size();
  if (n > max_edges)
    fail(Errc::knot_too_large, "quadrisecant scan is capped at " + std::to_string(max_edges) +
                                   " edges, got " + std::to_string(n));

  QuadrisecantScan scan;
  const double diag = knot.bbox_diagonal();
  const double residual_bound = 1e-7 * diag;
  constexpr double kEndpointMargin = 1e-7;  // hit parameters this close to 0/1 are non-generic

  auto same_line = [&](const Line3& a, const Line3& b) {
    const double ang = norm(cross(a.dir, b.dir));
    return ang < 1e-8 && line_point_distance(a, b.point) < 1e-8 * diag;
  };

  std::array<Line3, 4> lines;
  std::array<int, 4> edges;
  for (edges[0] = 0; edges[0] < n; ++edges[0])
    for (edges[1] = edges[0] + 1; edges[1] < n; ++edges[1])
      for (edges[2] = edges[1] + 1; edges[2] < n; ++edges[2])
        for (edges[3] = edges[2] + 1; edges[3] < n; ++edges[3]) {
          for (int k = 0; k < 4; ++k)
            lines[k] = {knot.vertex(edges[k]), knot.edge_vector(edges[k])};
          const TransversalResult tr = transversals_of_4_lines(lines);
          if (tr.degenerate) {
            ++scan.degenerate_tuples;
            continue;
          }
          for (const auto& sol : tr.lines) {
            QuadrisecantRecord rec;
            rec.line = sol.line;
            bool ok = true;
            double residual = 0.0;
            for (int k = 0; k < 4 && ok; ++k) {
              const Vec3 b = lines[k].point;
              const Vec3 e = lines[k].dir;  // unnormalized edge vector
              const Vec3 cn = cross(e, rec.line.dir);
              const double cn2 = norm2(cn);
              if (cn2 <= 1e-24 * norm2(e)) {
                ok = false;  // transversal parallel to the edge
                ++scan.endpoint_skips;
                break;
              }
              const double t = det3(rec.line.point - b, rec.line.dir, cn) / cn2;
              if (t < kEndpointMargin || t > 1.0 - kEndpointMargin) {
                ok = false;
                ++scan.endpoint_skips;
                break;
              }
              QuadHit& hit = rec.hits[k];
              hit.edge = edges[k];
              hit.t = t;
              hit.point = b + t * e;
              hit.s = dot(hit.point - rec.line.point, rec.line.dir);
              residual = std::max(residual, line_point_distance(rec.line, hit.point));
            }
            if (!ok || residual > residual_bound) continue;
            rec.residual = residual;
            std::sort(rec.hits.begin(), rec.hits.end(),
                      [](const QuadHit& a, const QuadHit& b) { return a.s < b.s; });
            rec.order = classify_order(rec.hits, n);
            if (filter == QuadFilter::alternating && rec.order != QuadOrderType::alternating)
              continue;
            bool dup = false;
            for (const auto& prev : scan.records)
              if (same_line(prev.line, rec.line)) {
                dup = true;
                break;
              }
            if (!dup) scan.records.push_back(rec);
          }
        }
  return scan;
}

}  // namespace polyknot
