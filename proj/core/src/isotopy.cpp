#include "polyknot/isotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "polyknot/predicates.hpp"
#include "polyknot/rng.hpp"

namespace polyknot {

namespace {

double knot_eps(const PolygonalKnot& k, double eps) { return eps > 0.0 ? eps : k.geom_eps(); }

// Contact points of the curve with the solid triangle are legal only within
// eps of the allowed carrier segments. A false "blocked" verdict only costs
// progress; a false "empty" verdict would change the isotopy class, so every
// borderline contact blocks.
struct EmptinessQuery {
  std::array<Vec3, 3> tri;
  std::array<std::pair<Vec3, Vec3>, 2> allowed;
  int allowed_count = 0;
  std::array<int, 2> skip_edges{-1, -1};
};

bool triangle_empty(const PolygonalKnot& k, const EmptinessQuery& q, double eps,
                    int* blocking_edge) {
  const int n = k.size();
  const double allow_tol = 4.0 * eps;
  auto allowed_contact = [&](const Vec3& c) {
    for (int s = 0; s < q.allowed_count; ++s) {
      if (point_segment_distance(c, q.allowed[s].first, q.allowed[s].second) <= allow_tol)
        return true;
    }
    return false;
  };

  for (int e = 0; e < n; ++e) {
    if (e == q.skip_edges[0] || e == q.skip_edges[1]) continue;
    std::array<Vec3, 4> contacts;
    const int cnt = segment_triangle_contacts(k.vertex(e), k.vertex(e + 1), q.tri, eps, contacts);
    for (int c = 0; c < cnt; ++c) {
      if (!allowed_contact(contacts[c])) {
        if (blocking_edge) *blocking_edge = e;
        return false;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    const bool on_skip = v == q.skip_edges[0] || (v + n - 1) % n == q.skip_edges[0] ||
                         v == q.skip_edges[1] || (v + n - 1) % n == q.skip_edges[1];
    if (on_skip) continue;
    if (point_triangle_distance(k.vertex(v), q.tri) <= eps && !allowed_contact(k.vertex(v))) {
      if (blocking_edge) *blocking_edge = v;  // report the incident edge index
      return false;
    }
  }
  return true;
}

EmptinessQuery add_query(const PolygonalKnot& k, int edge, const Vec3& apex) {
  const Vec3 p = k.vertex(edge);
  const Vec3 q = k.vertex(edge + 1);
  EmptinessQuery out;
  out.tri = {p, q, apex};
  out.allowed[0] = {p, q};
  out.allowed_count = 1;
  out.skip_edges = {edge, -1};
  return out;
}

EmptinessQuery remove_query(const PolygonalKnot& k, int v) {
  const int n = k.size();
  const Vec3 p = k.vertex(v - 1);
  const Vec3 x = k.vertex(v);
  const Vec3 q = k.vertex(v + 1);
  EmptinessQuery out;
  out.tri = {p, x, q};
  out.allowed[0] = {p, x};
  out.allowed[1] = {x, q};
  out.allowed_count = 2;
  out.skip_edges = {(v + n - 1) % n, v};
  return out;
}

}  // namespace

bool add_is_legal(const PolygonalKnot& knot, int edge, const Vec3& apex, double eps,
                  int* blocking_edge) {
  eps = knot_eps(knot, eps);
  if (!triangle_empty(knot, add_query(knot, edge, apex), eps, blocking_edge)) return false;
  // The two new edges must themselves be non-degenerate.
  return dist(knot.vertex(edge), apex) > eps && dist(knot.vertex(edge + 1), apex) > eps;
}

bool remove_is_legal(const PolygonalKnot& knot, int v, double eps, int* blocking_edge) {
  if (knot.size() <= 3) return false;
  eps = knot_eps(knot, eps);
  if (dist(knot.vertex(v - 1), knot.vertex(v + 1)) <= eps) return false;  // chord collapses
  return triangle_empty(knot, remove_query(knot, v), eps, blocking_edge);
}

IsotopyMove make_remove(const PolygonalKnot& knot, int v) {
  const int n = knot.size();
  v = ((v % n) + n) % n;
  return IsotopyMove{IsotopyMove::Kind::remove, v, knot.vertex(v),
                     {knot.vertex(v - 1), knot.vertex(v), knot.vertex(v + 1)}};
}

IsotopyMove make_add(const PolygonalKnot& knot, int edge, const Vec3& apex) {
  const int n = knot.size();
  edge = ((edge % n) + n) % n;
  return IsotopyMove{IsotopyMove::Kind::add, edge, apex,
                     {knot.vertex(edge), knot.vertex(edge + 1), apex}};
}

PolygonalKnot apply_move(const PolygonalKnot& knot, const IsotopyMove& move, double eps) {
  eps = knot_eps(knot, eps);
  const int n = knot.size();
  std::vector<Vec3> next;

  // Recorded evidence must match the curve the move is applied to, so a
  // sequence replayed by a third party cannot silently drift.
  auto check_evidence = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
    if (dist(move.evidence[0], a) > eps || dist(move.evidence[1], b) > eps ||
        dist(move.evidence[2], c) > eps)
      fail(Errc::invalid_argument, "move evidence does not match the curve");
  };

  if (move.kind == IsotopyMove::Kind::add) {
    if (move.index < 0 || move.index >= n)
      fail(Errc::invalid_argument, "add edge index out of range");
    check_evidence(knot.vertex(move.index), knot.vertex(move.index + 1), move.point);
    int blocker = -1;
    if (!add_is_legal(knot, move.index, move.point, eps, &blocker)) {
      if (blocker >= 0)
        fail(Errc::blocked_triangle,
             "edge " + std::to_string(blocker) + " meets the insertion triangle", blocker);
      fail(Errc::degenerate_triangle, "apex coincides with an edge endpoint");
    }
    next = knot.vertices();
    next.insert(next.begin() + move.index + 1, move.point);
  } else {
    if (n <= 3) fail(Errc::invalid_argument, "cannot remove a vertex from a triangle");
    if (move.index < 0 || move.index >= n)
      fail(Errc::invalid_argument, "remove vertex index out of range");
    check_evidence(knot.vertex(move.index - 1), knot.vertex(move.index),
                   knot.vertex(move.index + 1));
    if (dist(move.point, knot.vertex(move.index)) > eps)
      fail(Errc::invalid_argument, "move evidence does not match the curve");
    int blocker = -1;
    if (!remove_is_legal(knot, move.index, eps, &blocker)) {
      if (blocker >= 0)
        fail(Errc::blocked_triangle,
             "edge " + std::to_string(blocker) + " meets the removal triangle", blocker);
      fail(Errc::degenerate_triangle, "removal chord collapses to a point");
    }
    next = knot.vertices();
    next.erase(next.begin() + move.index);
  }

  const SimplicityReport rep = is_simple(next, eps);
  if (!rep.simple)
    fail(Errc::degenerate_triangle, "move would break simplicity",
         rep.first ? rep.first->a : -1);
  return PolygonalKnot::from_vertices(std::move(next), eps);
}

MoveSequence unknot_by_height(const PolygonalKnot& knot, const Direction& u, double eps) {
  eps = knot_eps(knot, eps);
  const Vec3 dir = u.vec();

  auto heights_of = [&](const PolygonalKnot& k) {
    std::vector<double> h(k.size());
    for (int i = 0; i < k.size(); ++i) h[i] = dot(dir, k.vertex(i));
    return h;
  };
  auto check_distinct = [&](const std::vector<double>& h) {
    std::vector<double> s = h;
    std::sort(s.begin(), s.end());
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] - s[i - 1] <= eps) fail(Errc::tied_heights, "two vertices at the same height");
  };
  auto maxima_count = [&](const std::vector<double>& h) {
    const int n = static_cast<int>(h.size());
    int count = 0;
    for (int i = 0; i < n; ++i)
      if (h[i] > h[(i + n - 1) % n] && h[i] > h[(i + 1) % n]) ++count;
    return count;
  };

  {
    const auto h = heights_of(knot);
    check_distinct(h);
    const int m = maxima_count(h);
    if (m != 1)
      fail(Errc::multiple_local_maxima,
           "height function has " + std::to_string(m) + " local maxima", m);
  }

  MoveSequence seq{knot, {}, knot};
  PolygonalKnot cur = knot;
  while (cur.size() > 3) {
    const auto h = heights_of(cur);
    const int n = cur.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::partial_sort(idx.begin(), idx.begin() + 3, idx.end(),
                      [&](int a, int b) { return h[a] > h[b]; });
    std::array<int, 3> top{idx[0], idx[1], idx[2]};
    std::sort(top.begin(), top.end());

    // With one local maximum the three highest vertices are consecutive;
    // the one whose neighbors are both in the triple gets removed.
    int middle = -1;
    if (top[2] - top[0] == 2)
      middle = top[1];
    else if (top[0] == 0 && top[1] == 1 && top[2] == n - 1)
      middle = 0;
    else if (top[0] == 0 && top[1] == n - 2 && top[2] == n - 1)
      middle = n - 1;
    if (middle < 0)
      fail(Errc::multiple_local_maxima, "three highest vertices are not consecutive");

    IsotopyMove mv = make_remove(cur, middle);
    cur = apply_move(cur, mv, 0.0);  // BlockedTriangle here means a broken precondition
    seq.moves.push_back(std::move(mv));
  }
  seq.final = cur;
  return seq;
}

std::pair<PolygonalKnot, MoveSequence> greedy_simplify(const PolygonalKnot& knot, long budget,
                                                       double eps) {
  MoveSequence seq{knot, {}, knot};
  PolygonalKnot cur = knot;
  int start = 0;
  long used = 0;
  while (cur.size() > 3 && used < budget) {
    const int n = cur.size();
    int found = -1;
    for (int off = 0; off < n; ++off) {
      const int v = (start + off) % n;
      if (remove_is_legal(cur, v, eps)) {
        found = v;
        break;
      }
    }
    if (found < 0) break;  // stalled
    IsotopyMove mv = make_remove(cur, found);
    cur = apply_move(cur, mv, eps);
    seq.moves.push_back(std::move(mv));
    ++used;
    start = found % cur.size();
  }
  seq.final = cur;
  return {cur, seq};
}

std::pair<PolygonalKnot, MoveSequence> scramble(const PolygonalKnot& knot, int steps,
                                                std::uint64_t seed, double eps) {
  if (steps < 0) fail(Errc::invalid_argument, "steps must be non-negative");
  MoveSequence seq{knot, {}, knot};
  PolygonalKnot cur = knot;
  const int n0 = knot.size();
  constexpr int kTriesPerStep = 64;

  for (int step = 0; step < steps; ++step) {
    bool placed = false;
    for (int attempt = 0; attempt < kTriesPerStep && !placed; ++attempt) {
      const std::uint64_t k = rng::key(seed, static_cast<std::uint64_t>(step), attempt);
      const int n = cur.size();
      // Removes only once the curve has grown past its initial size, so a
      // scramble never consumes the seed shape itself.
      const bool try_remove = cur.size() > n0 && rng::uniform01(rng::key(k, 1)) < 0.5;
      if (try_remove) {
        // Vertex 0 stays put so the recorded sequence inverts without
        // rotating the vertex list.
        const int v0 = 1 + static_cast<int>(rng::uniform01(rng::key(k, 2)) * (n - 1)) % (n - 1);
        for (int off = 0; off < n - 1; ++off) {
          const int v = 1 + (v0 - 1 + off) % (n - 1);
          if (!remove_is_legal(cur, v, eps)) continue;
          IsotopyMove mv = make_remove(cur, v);
          try {
            cur = apply_move(cur, mv, eps);
          } catch (const Error&) {
            continue;
          }
          seq.moves.push_back(std::move(mv));
          placed = true;
          break;
        }
      } else {
        const int e = static_cast<int>(rng::uniform01(rng::key(k, 3)) * n) % n;
        const Vec3 mid = cur.point_on_edge(e, 0.5);
        const double radius = cur.edge_length(e);
        const Vec3 dir = rng::unit_sphere(rng::key(k, 4));
        const double rad = radius * std::cbrt(rng::uniform01(rng::key(k, 5)));
        const Vec3 apex = mid + dir * rad;
        if (add_is_legal(cur, e, apex, eps)) {
          IsotopyMove mv = make_add(cur, e, apex);
          try {
            cur = apply_move(cur, mv, eps);
          } catch (const Error&) {
            continue;  // post-move simplicity rejected the apex; resample
          }
          seq.moves.push_back(std::move(mv));
          placed = true;
        }
      }
    }
    if (!placed)
      fail(Errc::generation_failed, "no legal move found at step " + std::to_string(step), step);
  }
  seq.final = cur;
  return {cur, seq};
}

MoveSequence invert(const MoveSequence& seq) {
  MoveSequence out{seq.final, {}, seq.final};
  PolygonalKnot cur = seq.final;
  // Undoing a remove of vertex 0 re-inserts it as an append, which rotates
  // the vertex list relative to the forward states. Track that rotation so
  // later inverse moves land on the right elements: cur[j] corresponds to
  // forward[(j + rot) mod n].
  long rot = 0;
  for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it) {
    const IsotopyMove& mv = *it;
    const int n = cur.size();
    IsotopyMove inv;
    int pos_fwd, pos_cur, new_n;
    if (mv.kind == IsotopyMove::Kind::add) {
      pos_fwd = mv.index + 1;  // apex position in the forward frame
      pos_cur = static_cast<int>(((pos_fwd - rot) % n + n) % n);
      inv = make_remove(cur, pos_cur);
      new_n = n - 1;
    } else {
      const int edge_fwd = ((mv.index - 1) % n + n) % n;
      const int edge_cur = static_cast<int>(((edge_fwd - rot) % n + n) % n);
      inv = make_add(cur, edge_cur, mv.point);
      pos_fwd = mv.index;
      pos_cur = edge_cur + 1;
      new_n = n + 1;
    }
    cur = apply_move(cur, inv);
    rot = ((pos_fwd - pos_cur) % new_n + new_n) % new_n;
    out.moves.push_back(std::move(inv));
  }
  out.final = cur;
  return out;
}

PolygonalKnot replay(const MoveSequence& seq, double eps) {
  PolygonalKnot cur = seq.initial;
  for (const IsotopyMove& mv : seq.moves) cur = apply_move(cur, mv, eps);
  if (!(cur == seq.final)) fail(Errc::invalid_argument, "replayed moves do not reach the recorded final knot");
  return cur;
}

}  // namespace polyknot
