#include "polyknot/predicates.hpp"

#include <algorithm>
#include <cmath>

namespace polyknot {

double orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return det3(b - a, c - a, d - a);
}

Vec3 closest_point_on_segment(const Vec3& p, const Vec3& a, const Vec3& b, double* t_out) {
  const Vec3 ab = b - a;
  const double denom = norm2(ab);
  double t = denom > 0.0 ? dot(p - a, ab) / denom : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  if (t_out) *t_out = t;
  return a + ab * t;
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  return dist(p, closest_point_on_segment(p, a, b));
}

double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2,
                                double* s_out, double* t_out, Vec3* c1_out, Vec3* c2_out) {
  // Ericson, Real-Time Collision Detection, 5.1.9.
  const Vec3 d1 = q1 - p1;
  const Vec3 d2 = q2 - p2;
  const Vec3 r = p1 - p2;
  const double a = norm2(d1);
  const double e = norm2(d2);
  const double f = dot(d2, r);

  double s = 0.0, t = 0.0;
  constexpr double kTiny = 1e-30;

  if (a <= kTiny && e <= kTiny) {
    s = t = 0.0;
  } else if (a <= kTiny) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e <= kTiny) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      s = denom > kTiny ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  const Vec3 c1 = p1 + d1 * s;
  const Vec3 c2 = p2 + d2 * t;
  if (s_out) *s_out = s;
  if (t_out) *t_out = t;
  if (c1_out) *c1_out = c1;
  if (c2_out) *c2_out = c2;
  return dist(c1, c2);
}

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  // Ericson 5.1.5; falls back to edge projections for slivers.
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 ap = p - a;

  const double d1 = dot(ab, ap);
  const double d2 = dot(ac, ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = dot(ab, bp);
  const double d4 = dot(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return a + ab * v;
  }

  const Vec3 cp = p - c;
  const double d5 = dot(ab, cp);
  const double d6 = dot(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return a + ac * w;
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return b + (c - b) * w;
  }

  const double denom = va + vb + vc;
  if (!(std::abs(denom) > 0.0)) {
    // Degenerate triangle: best of the three edges.
    Vec3 best = closest_point_on_segment(p, a, b);
    double bd = dist(p, best);
    for (const auto& q : {closest_point_on_segment(p, b, c), closest_point_on_segment(p, c, a)}) {
      const double d = dist(p, q);
      if (d < bd) {
        bd = d;
        best = q;
      }
    }
    return best;
  }
  const double v = vb / denom;
  const double w = vc / denom;
  return a + ab * v + ac * w;
}

double point_triangle_distance(const Vec3& p, const std::array<Vec3, 3>& tri) {
  return dist(p, closest_point_on_triangle(p, tri[0], tri[1], tri[2]));
}

namespace {

// Longest side of the triangle, used as the 1-d stand-in for zero-area input.
void degenerate_triangle_segment(const std::array<Vec3, 3>& tri, Vec3& e0, Vec3& e1) {
  double best = -1.0;
  for (int i = 0; i < 3; ++i) {
    const Vec3& a = tri[i];
    const Vec3& b = tri[(i + 1) % 3];
    const double d = dist(a, b);
    if (d > best) {
      best = d;
      e0 = a;
      e1 = b;
    }
  }
}

double triangle_scale(const std::array<Vec3, 3>& tri) {
  return std::max({dist(tri[0], tri[1]), dist(tri[1], tri[2]), dist(tri[2], tri[0])});
}

bool pierce_point(const Vec3& a, const Vec3& b, const std::array<Vec3, 3>& tri, Vec3& out) {
  const Vec3 n = cross(tri[1] - tri[0], tri[2] - tri[0]);
  const double da = dot(n, a - tri[0]);
  const double db = dot(n, b - tri[0]);
  if (da * db >= 0.0) return false;
  const double t = da / (da - db);
  const Vec3 x = lerp(a, b, t);
  // Inside test via same-side sign of the three edge wedges.
  for (int i = 0; i < 3; ++i) {
    const Vec3 w = cross(tri[(i + 1) % 3] - tri[i], x - tri[i]);
    if (dot(w, n) < 0.0) return false;
  }
  out = x;
  return true;
}

}  // namespace

double segment_triangle_distance(const Vec3& a, const Vec3& b, const std::array<Vec3, 3>& tri,
                                 Vec3* tri_witness) {
  const double scale = triangle_scale(tri);
  const Vec3 n = cross(tri[1] - tri[0], tri[2] - tri[0]);
  if (norm(n) <= 1e-14 * scale * scale) {
    Vec3 e0, e1;
    degenerate_triangle_segment(tri, e0, e1);
    Vec3 cw;
    const double d = segment_segment_distance(a, b, e0, e1, nullptr, nullptr, nullptr, &cw);
    if (tri_witness) *tri_witness = cw;
    return d;
  }

  Vec3 x;
  if (pierce_point(a, b, tri, x)) {
    if (tri_witness) *tri_witness = x;
    return 0.0;
  }

  double best = dist(a, closest_point_on_triangle(a, tri[0], tri[1], tri[2]));
  Vec3 witness = closest_point_on_triangle(a, tri[0], tri[1], tri[2]);
  {
    const Vec3 w = closest_point_on_triangle(b, tri[0], tri[1], tri[2]);
    const double d = dist(b, w);
    if (d < best) {
      best = d;
      witness = w;
    }
  }
  for (int i = 0; i < 3; ++i) {
    Vec3 cw;
    const double d =
        segment_segment_distance(a, b, tri[i], tri[(i + 1) % 3], nullptr, nullptr, nullptr, &cw);
    if (d < best) {
      best = d;
      witness = cw;
    }
  }
  if (tri_witness) *tri_witness = witness;
  return best;
}

int segment_triangle_contacts(const Vec3& a, const Vec3& b, const std::array<Vec3, 3>& tri,
                              double eps, std::array<Vec3, 4>& out) {
  const double scale = triangle_scale(tri);
  const Vec3 n = cross(tri[1] - tri[0], tri[2] - tri[0]);
  int count = 0;
  auto push = [&](const Vec3& p) {
    for (int i = 0; i < count; ++i)
      if (dist(out[i], p) <= eps) return;
    if (count < 4) out[count++] = p;
  };

  if (norm(n) <= 1e-14 * scale * scale) {
    Vec3 e0, e1;
    degenerate_triangle_segment(tri, e0, e1);
    Vec3 cw;
    if (segment_segment_distance(a, b, e0, e1, nullptr, nullptr, nullptr, &cw) <= eps) push(cw);
    return count;
  }

  const Vec3 nh = normalized(n);
  const double da = dot(nh, a - tri[0]);
  const double db = dot(nh, b - tri[0]);

  if (std::abs(da) <= eps && std::abs(db) <= eps) {
    // Coplanar: clip the segment parameter range by the three inward half-planes.
    double t0 = 0.0, t1 = 1.0;
    bool empty = false;
    for (int i = 0; i < 3 && !empty; ++i) {
      const Vec3& e = tri[i];
      Vec3 m = cross(nh, tri[(i + 1) % 3] - e);
      if (dot(m, tri[(i + 2) % 3] - e) < 0.0) m = -m;
      const double mn = norm(m);
      if (mn <= 0.0) continue;
      m = m / mn;
      const double fa = dot(m, a - e);
      const double fb = dot(m, b - e);
      const double lo = -eps;
      if (fa < lo && fb < lo) {
        empty = true;
      } else if (std::abs(fb - fa) > 0.0) {
        const double tc = (lo - fa) / (fb - fa);
        if (fa < lo)
          t0 = std::max(t0, tc);
        else if (fb < lo)
          t1 = std::min(t1, tc);
      }
    }
    if (!empty && t0 <= t1) {
      push(lerp(a, b, t0));
      push(lerp(a, b, t1));
      push(lerp(a, b, 0.5 * (t0 + t1)));
      return count;
    }
    Vec3 w;
    if (segment_triangle_distance(a, b, tri, &w) <= eps) push(w);
    return count;
  }

  Vec3 x;
  if (pierce_point(a, b, tri, x)) push(x);
  Vec3 w;
  if (segment_triangle_distance(a, b, tri, &w) <= eps) push(w);
  return count;
}

}  // namespace polyknot
