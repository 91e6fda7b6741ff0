#include "polyknot/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyknot/predicates.hpp"
#include "polyknot/rng.hpp"

namespace polyknot {

namespace {

constexpr double kTransversalityAngle = 1e-6;  // radians

struct ProjectionAttempt {
  bool ok = false;
  std::string why;                      // first violating feature
  std::vector<Vec2> verts;
  std::vector<double> depths;
  std::vector<DiagramCrossing> crossings;
};

ProjectionAttempt try_project(const PolygonalKnot& knot, const Vec3& u, double eps) {
  ProjectionAttempt at;
  const int n = knot.size();
  const Vec3 helper = std::abs(u.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(u, helper));
  const Vec3 e2 = cross(u, e1);

  at.verts.resize(n);
  at.depths.resize(n);
  for (int i = 0; i < n; ++i) {
    at.verts[i] = {dot(e1, knot.vertex(i)), dot(e2, knot.vertex(i))};
    at.depths[i] = dot(u, knot.vertex(i));
  }
  auto reject = [&](std::string why) {
    at.ok = false;
    at.why = std::move(why);
    return at;
  };

  for (int i = 0; i < n; ++i)
    if (dist(at.verts[i], at.verts[(i + 1) % n]) <= eps)
      return reject("edge " + std::to_string(i) + " projects to a point");
  for (int i = 0; i < n; ++i) {
    const Vec2 a = at.verts[(i + n - 1) % n] - at.verts[i];
    const Vec2 b = at.verts[(i + 1) % n] - at.verts[i];
    if (angle_between(a, b) < kTransversalityAngle)
      return reject("projection folds back at vertex " + std::to_string(i));
  }
  for (int v = 0; v < n; ++v)
    for (int e = 0; e < n; ++e) {
      if (e == v || (e + 1) % n == v) continue;
      const Vec2 a = at.verts[e], b = at.verts[(e + 1) % n];
      const Vec2 ab = b - a;
      double t = dot(at.verts[v] - a, ab) / norm2(ab);
      t = std::clamp(t, 0.0, 1.0);
      if (dist(at.verts[v], a + ab * t) <= eps)
        return reject("vertex " + std::to_string(v) + " projects onto edge " + std::to_string(e));
    }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = j - i;
      if (d <= 1 || d == n - 1) continue;
      const Vec2 p = at.verts[i], r = at.verts[(i + 1) % n] - p;
      const Vec2 s = at.verts[j], w = at.verts[(j + 1) % n] - s;
      const double denom = cross(r, w);
      if (std::abs(denom) / (norm(r) * norm(w)) < kTransversalityAngle) {
        const Vec3 a3{p.x, p.y, 0}, b3{p.x + r.x, p.y + r.y, 0};
        const Vec3 c3{s.x, s.y, 0}, d3{s.x + w.x, s.y + w.y, 0};
        if (segment_segment_distance(a3, b3, c3, d3) <= eps)
          return reject("edges " + std::to_string(i) + "," + std::to_string(j) +
                        " cross tangentially");
        continue;
      }
      const double t = cross(s - p, w) / denom;
      const double tt = cross(s - p, r) / denom;
      if (t < 0.0 || t > 1.0 || tt < 0.0 || tt > 1.0) continue;
      const Vec2 x = p + r * t;
      for (int vtx = 0; vtx < n; ++vtx)
        if (dist(x, at.verts[vtx]) <= eps)
          return reject("crossing of edges " + std::to_string(i) + "," + std::to_string(j) +
                        " too close to vertex " + std::to_string(vtx));

      DiagramCrossing c;
      c.edge_a = i;
      c.edge_b = j;
      c.t_a = t;
      c.t_b = tt;
      c.position = x;
      c.depth_a = at.depths[i] + t * (at.depths[(i + 1) % n] - at.depths[i]);
      c.depth_b = at.depths[j] + tt * (at.depths[(j + 1) % n] - at.depths[j]);
      if (std::abs(c.depth_a - c.depth_b) <= eps)
        return reject("crossing of edges " + std::to_string(i) + "," + std::to_string(j) +
                      " has no depth margin");
      c.over_edge = c.depth_a > c.depth_b ? i : j;
      at.crossings.push_back(c);
    }
  }
  for (size_t a = 0; a < at.crossings.size(); ++a)
    for (size_t b = a + 1; b < at.crossings.size(); ++b)
      if (dist(at.crossings[a].position, at.crossings[b].position) <= eps)
        return reject("two crossings coincide (triple point)");

  at.ok = true;
  return at;
}

// Arcs run between consecutive under-passages along the knot; a crossing-free
// diagram is a single arc.
void assign_arcs(KnotDiagram& d) {
  auto& passages = d.passages;
  passages.clear();
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& cr = d.crossings[c];
    passages.push_back({c, cr.edge_a, cr.t_a, cr.over_edge != cr.edge_a, -1});
    passages.push_back({c, cr.edge_b, cr.t_b, cr.over_edge != cr.edge_b, -1});
  }
  std::sort(passages.begin(), passages.end(), [](const CrossingPassage& a, const CrossingPassage& b) {
    return a.edge + a.t < b.edge + b.t;
  });

  const int n_under = static_cast<int>(std::count_if(
      passages.begin(), passages.end(), [](const CrossingPassage& p) { return p.under; }));
  d.arc_count = std::max(1, n_under);

  // Arc m starts right after the m-th under-passage (in knot order).
  int under_seen = 0;
  std::vector<int> under_index_of_passage(passages.size(), -1);
  for (size_t i = 0; i < passages.size(); ++i)
    if (passages[i].under) under_index_of_passage[i] = under_seen++;

  int current_arc = n_under > 0 ? n_under - 1 : 0;  // arc live before the first cut
  for (size_t i = 0; i < passages.size(); ++i) {
    auto& p = passages[i];
    auto& cr = d.crossings[p.crossing];
    if (p.under) {
      p.arc = current_arc;  // the arc this passage terminates
      cr.under_in_arc = current_arc;
      cr.under_out_arc = under_index_of_passage[i];
      current_arc = under_index_of_passage[i];
    } else {
      p.arc = current_arc;
      cr.over_arc = current_arc;
    }
  }
}

struct HalfEdge {
  int from = 0, to = 0;
  int twin = 0;
  int next = -1;
  int face = -1;
};

void build_faces(KnotDiagram& d, double eps) {
  const int n = static_cast<int>(d.vertices.size());
  const int C = d.crossing_count();
  d.nodes = d.vertices;
  for (const auto& c : d.crossings) d.nodes.push_back(c.position);

  // Split each projected edge at its crossings.
  std::vector<std::vector<std::pair<double, int>>> splits(n);
  for (int i = 0; i < n; ++i) splits[i].push_back({0.0, i});
  for (int c = 0; c < C; ++c) {
    splits[d.crossings[c].edge_a].push_back({d.crossings[c].t_a, n + c});
    splits[d.crossings[c].edge_b].push_back({d.crossings[c].t_b, n + c});
  }
  std::vector<HalfEdge> hes;
  for (int i = 0; i < n; ++i) {
    auto& sp = splits[i];
    std::sort(sp.begin(), sp.end());
    sp.push_back({1.0, (i + 1) % n});
    for (size_t k = 0; k + 1 < sp.size(); ++k) {
      const int a = sp[k].second, b = sp[k + 1].second;
      const int id = static_cast<int>(hes.size());
      hes.push_back({a, b, id + 1, -1, -1});
      hes.push_back({b, a, id, -1, -1});
    }
  }

  // Order outgoing half-edges counterclockwise around each node, then chain
  // next(h) = the clockwise neighbor of twin(h); this traces every bounded
  // face counterclockwise and the unbounded face clockwise.
  std::vector<std::vector<int>> outgoing(d.nodes.size());
  for (size_t h = 0; h < hes.size(); ++h) outgoing[hes[h].from].push_back(static_cast<int>(h));
  for (auto& out : outgoing) {
    std::sort(out.begin(), out.end(), [&](int ha, int hb) {
      const Vec2 va = d.nodes[hes[ha].to] - d.nodes[hes[ha].from];
      const Vec2 vb = d.nodes[hes[hb].to] - d.nodes[hes[hb].from];
      return std::atan2(va.y, va.x) < std::atan2(vb.y, vb.x);
    });
  }
  for (size_t h = 0; h < hes.size(); ++h) {
    const int node = hes[h].to;
    const auto& out = outgoing[node];
    const int twin = hes[h].twin;
    const auto it = std::find(out.begin(), out.end(), twin);
    const int pos = static_cast<int>(it - out.begin());
    const int deg = static_cast<int>(out.size());
    hes[h].next = out[(pos + deg - 1) % deg];
  }

  d.faces.clear();
  for (size_t h0 = 0; h0 < hes.size(); ++h0) {
    if (hes[h0].face >= 0) continue;
    const int fid = d.face_count();
    DiagramFace face;
    int h = static_cast<int>(h0);
    do {
      hes[h].face = fid;
      face.node_cycle.push_back(hes[h].from);
      face.polygon.push_back(d.nodes[hes[h].from]);
      h = hes[h].next;
    } while (h != static_cast<int>(h0));
    double area2 = 0.0;
    for (size_t i = 0; i < face.polygon.size(); ++i) {
      const Vec2& a = face.polygon[i];
      const Vec2& b = face.polygon[(i + 1) % face.polygon.size()];
      area2 += cross(a, b);
    }
    face.signed_area = 0.5 * area2;
    d.faces.push_back(std::move(face));
  }

  d.unbounded_face = -1;
  double min_area = 0.0;
  for (int f = 0; f < d.face_count(); ++f) {
    if (d.faces[f].signed_area < min_area) {
      min_area = d.faces[f].signed_area;
      d.unbounded_face = f;
    }
  }
  if (d.unbounded_face < 0)
    fail(Errc::coloring_failed, "no clockwise face cycle; arrangement is inconsistent");
  for (int f = 0; f < d.face_count(); ++f) d.faces[f].bounded = f != d.unbounded_face;

  if (d.face_count() != C + 2)
    fail(Errc::coloring_failed, "face count " + std::to_string(d.face_count()) +
                                    " violates crossings+2 = " + std::to_string(C + 2));

  // Face adjacency across arrangement edges, then the chessboard coloring.
  for (size_t h = 0; h < hes.size(); h += 2) {
    const int fa = hes[h].face, fb = hes[h + 1].face;
    if (fa == fb)
      fail(Errc::coloring_failed, "arrangement edge borders one face on both sides");
    d.faces[fa].adjacent.push_back(fb);
    d.faces[fb].adjacent.push_back(fa);
  }
  for (auto& f : d.faces) {
    std::sort(f.adjacent.begin(), f.adjacent.end());
    f.adjacent.erase(std::unique(f.adjacent.begin(), f.adjacent.end()), f.adjacent.end());
  }

  for (auto& f : d.faces) f.color = -1;
  std::vector<int> queue{d.unbounded_face};
  d.faces[d.unbounded_face].color = 0;
  while (!queue.empty()) {
    const int f = queue.back();
    queue.pop_back();
    for (int g : d.faces[f].adjacent) {
      if (d.faces[g].color < 0) {
        d.faces[g].color = 1 - d.faces[f].color;
        queue.push_back(g);
      } else if (d.faces[g].color == d.faces[f].color) {
        fail(Errc::coloring_failed, "adjacent faces demand the same color");
      }
    }
  }
  for (const auto& f : d.faces)
    if (f.color < 0) fail(Errc::coloring_failed, "arrangement is not connected");
  (void)eps;
}

}  // namespace

Vec2 project_point(const KnotDiagram& diagram, const Vec3& p) {
  return {dot(diagram.frame_u, p), dot(diagram.frame_v, p)};
}

KnotDiagram build_diagram(const PolygonalKnot& knot, std::optional<Direction> u,
                          std::uint64_t seed, double eps) {
  eps = eps > 0.0 ? eps : knot.geom_eps();

  ProjectionAttempt attempt;
  Vec3 dir;
  if (u) {
    dir = u->vec();
    attempt = try_project(knot, dir, eps);
    if (!attempt.ok) fail(Errc::non_generic_direction, attempt.why);
  } else {
    // Among the sampled generic directions, keep the view with the fewest
    // crossings.
    constexpr int kBudget = 64;
    bool found = false;
    for (int i = 0; i < kBudget; ++i) {
      const Vec3 candidate = rng::unit_sphere(rng::key(seed, 0x64697267ULL, i));
      ProjectionAttempt trial = try_project(knot, candidate, eps);
      if (!trial.ok) continue;
      if (!found || trial.crossings.size() < attempt.crossings.size()) {
        attempt = std::move(trial);
        dir = candidate;
      }
      found = true;
    }
    if (!found)
      fail(Errc::no_generic_direction, "no generic projection direction within the retry budget");
  }

  KnotDiagram d;
  d.direction = Direction(dir);
  const Vec3 helper = std::abs(dir.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  d.frame_u = normalized(cross(dir, helper));
  d.frame_v = cross(dir, d.frame_u);
  d.vertices = std::move(attempt.verts);
  d.depths = std::move(attempt.depths);
  d.crossings = std::move(attempt.crossings);

  assign_arcs(d);
  build_faces(d, eps);
  return d;
}

namespace {

// Parity crossing test; callers keep candidates away from the boundary.
bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly) {
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double polygon_boundary_distance(const Vec2& p, const std::vector<Vec2>& poly) {
  double best = std::numeric_limits<double>::infinity();
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i], b = poly[(i + 1) % n];
    const Vec2 ab = b - a;
    const double len2 = norm2(ab);
    double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, dist(p, a + ab * t));
  }
  return best;
}

// Interior representative: centroid of the largest ear, pulled toward the ear
// tip until the point-in-face test accepts it. Plain centroids can fall
// outside non-convex faces.
std::optional<Vec2> face_interior_point(const DiagramFace& face) {
  const auto& poly = face.polygon;
  const int m = static_cast<int>(poly.size());
  struct Ear {
    double area;
    int i;
  };
  std::vector<Ear> ears;
  for (int i = 0; i < m; ++i) {
    const Vec2& a = poly[(i + m - 1) % m];
    const Vec2& b = poly[i];
    const Vec2& c = poly[(i + 1) % m];
    const double a2 = cross(b - a, c - b);
    if (a2 > 0.0) ears.push_back({a2, i});
  }
  std::sort(ears.begin(), ears.end(), [](const Ear& x, const Ear& y) { return x.area > y.area; });
  for (const Ear& ear : ears) {
    const Vec2& a = poly[(ear.i + m - 1) % m];
    const Vec2& b = poly[ear.i];
    const Vec2& c = poly[(ear.i + 1) % m];
    const Vec2 centroid = (a + b + c) / 3.0;
    const double scale = std::max(dist(a, b), dist(b, c));
    for (double s : {1.0, 0.5, 0.25, 0.1, 0.02, 0.004}) {
      const Vec2 candidate = b + (centroid - b) * s;
      if (point_in_polygon(candidate, poly) &&
          polygon_boundary_distance(candidate, poly) > 1e-9 * scale)
        return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace

FaceColoring color_faces(const KnotDiagram& diagram) {
  // Re-verify properness; a violation here is an arrangement bug.
  for (int f = 0; f < diagram.face_count(); ++f)
    for (int g : diagram.faces[f].adjacent)
      if (diagram.faces[f].color == diagram.faces[g].color)
        fail(Errc::coloring_failed, "chessboard coloring is not proper");
  if (diagram.unbounded_face < 0 || diagram.faces[diagram.unbounded_face].color != 0)
    fail(Errc::coloring_failed, "unbounded face is not white");

  FaceColoring out;
  for (int f = 0; f < diagram.face_count(); ++f) {
    const auto& face = diagram.faces[f];
    if (!face.bounded || face.color != 0) continue;
    const auto pt = face_interior_point(face);
    if (!pt) fail(Errc::coloring_failed, "no interior point found for face " + std::to_string(f), f);
    out.white_bounded_faces.push_back(f);
    out.white_interior_points.push_back(*pt);
  }
  out.trivial_candidate = out.white_bounded_faces.empty();
  return out;
}

std::optional<Tricoloring> tricolorable(const KnotDiagram& diagram) {
  const int arcs = diagram.arc_count;
  const int C = diagram.crossing_count();
  if (C == 0 || arcs < 2) return std::nullopt;

  // Row per crossing: coefficients over GF(3) of over + under_in + under_out.
  std::vector<std::vector<int>> rows(C, std::vector<int>(arcs, 0));
  for (int c = 0; c < C; ++c) {
    const auto& cr = diagram.crossings[c];
    rows[c][cr.over_arc] = (rows[c][cr.over_arc] + 1) % 3;
    rows[c][cr.under_in_arc] = (rows[c][cr.under_in_arc] + 1) % 3;
    rows[c][cr.under_out_arc] = (rows[c][cr.under_out_arc] + 1) % 3;
  }

  // Gaussian elimination over GF(3).
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < arcs && rank < C; ++col) {
    int pr = -1;
    for (int r = rank; r < C; ++r)
      if (rows[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    const int inv = rows[rank][col] == 1 ? 1 : 2;  // inverse mod 3
    for (int j = 0; j < arcs; ++j) rows[rank][j] = rows[rank][j] * inv % 3;
    for (int r = 0; r < C; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int j = 0; j < arcs; ++j) rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % 3 + 3) % 3;
    }
    pivot_col.push_back(col);
    ++rank;
  }

  const int nullity = arcs - rank;
  if (nullity < 2) return std::nullopt;  // only monochromatic solutions

  // Kernel vector from the first free column, guaranteed non-constant after
  // possibly subtracting the all-ones solution.
  std::vector<bool> is_pivot(arcs, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int col = 0; col < arcs; ++col)
    if (!is_pivot[col]) {
      free_col = col;
      break;
    }

  std::vector<int> sol(arcs, 0);
  sol[free_col] = 1;
  for (int r = 0; r < rank; ++r) {
    const int pc = pivot_col[r];
    sol[pc] = ((-rows[r][free_col]) % 3 + 3) % 3;
  }
  const bool constant = std::all_of(sol.begin(), sol.end(), [&](int v) { return v == sol[0]; });
  if (constant) {
    // Add an independent kernel vector: the next free column.
    int free2 = -1;
    for (int col = free_col + 1; col < arcs; ++col)
      if (!is_pivot[col]) {
        free2 = col;
        break;
      }
    if (free2 < 0) return std::nullopt;
    sol[free2] = (sol[free2] + 1) % 3;
    for (int r = 0; r < rank; ++r) {
      const int pc = pivot_col[r];
      sol[pc] = ((sol[pc] - rows[r][free2]) % 3 + 3) % 3;
    }
  }

  Tricoloring out;
  out.arc_colors = sol;
  bool used[3] = {false, false, false};
  for (int v : sol) used[v] = true;
  out.uses_three_colors = used[0] && used[1] && used[2];
  return out;
}

}  // namespace polyknot
