#include "polyknot/crofton.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polyknot/curvature.hpp"
#include "polyknot/rng.hpp"

namespace polyknot {

const char* crofton_mode_name(CroftonMode m) {
  return m == CroftonMode::plane_projection ? "plane-projection" : "line-projection";
}

namespace {

double knot_eps(const PolygonalKnot& k, double eps) { return eps > 0.0 ? eps : k.geom_eps(); }

std::vector<double> heights(const PolygonalKnot& k, const Vec3& u) {
  std::vector<double> h(k.size());
  for (int i = 0; i < k.size(); ++i) h[i] = dot(u, k.vertex(i));
  return h;
}

bool heights_distinct(const std::vector<double>& h, double eps) {
  std::vector<double> s = h;
  std::sort(s.begin(), s.end());
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] - s[i - 1] <= eps) return false;
  return true;
}

int count_maxima(const std::vector<double>& h) {
  const int n = static_cast<int>(h.size());
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (h[i] > h[(i + n - 1) % n] && h[i] > h[(i + 1) % n]) ++count;
  return count;
}

struct RunningStats {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++n;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  double stderr_mean() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / (static_cast<double>(n) * (n - 1)));
  }
};

// Total curvature of the projection onto the plane perpendicular to u;
// rejects directions that degenerate an edge.
bool projected_curvature(const PolygonalKnot& k, const Vec3& u, double eps, double& out) {
  const Vec3 helper = std::abs(u.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(u, helper));
  const Vec3 e2 = cross(u, e1);
  const int n = k.size();
  std::vector<Vec2> q(n);
  for (int i = 0; i < n; ++i) q[i] = {dot(e1, k.vertex(i)), dot(e2, k.vertex(i))};
  for (int i = 0; i < n; ++i)
    if (dist(q[i], q[(i + 1) % n]) <= eps) return false;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 a = q[i] - q[(i + n - 1) % n];
    const Vec2 b = q[(i + 1) % n] - q[i];
    total += angle_between(a, b);
  }
  out = total;
  return true;
}

}  // namespace

int local_maxima_count(const PolygonalKnot& knot, const Direction& u, double eps) {
  eps = knot_eps(knot, eps);
  const auto h = heights(knot, u.vec());
  if (!heights_distinct(h, eps)) fail(Errc::tied_heights, "vertex heights not pairwise distinct");
  return count_maxima(h);
}

SliceRegion slice_area(const PolygonalKnot& knot, int vertex) {
  const int n = knot.size();
  vertex = ((vertex % n) + n) % n;
  const Vec3 in = knot.vertex(vertex) - knot.vertex(vertex - 1);
  const Vec3 out = knot.vertex(vertex + 1) - knot.vertex(vertex);
  const double eps = knot.geom_eps();
  if (norm(in) <= eps || norm(out) <= eps)
    fail(Errc::degenerate_edge, "zero-length edge at vertex " + std::to_string(vertex), vertex);
  const double phi = angle_between(in, out);
  return SliceRegion{vertex, Direction(in), Direction(out), phi, 2.0 * phi};
}

CroftonEstimate crofton_estimate(const PolygonalKnot& knot, CroftonMode mode, int samples,
                                 std::uint64_t seed, double eps) {
  if (samples < 100) fail(Errc::invalid_argument, "need at least 100 samples");
  eps = knot_eps(knot, eps);

  CroftonEstimate est{mode, samples, seed, 0.0, 0.0, 0};
  RunningStats stats;
  constexpr int kRetries = 64;

  for (int i = 0; i < samples; ++i) {
    double value = 0.0;
    bool ok = false;
    for (int retry = 0; retry < kRetries && !ok; ++retry) {
      const Vec3 u = rng::unit_sphere(rng::key(seed, i, retry));
      if (mode == CroftonMode::plane_projection) {
        ok = projected_curvature(knot, u, eps, value);
      } else {
        const auto h = heights(knot, u);
        if (heights_distinct(h, eps)) {
          // Strict extrema come in max/min pairs on a closed curve.
          value = std::numbers::pi * 2.0 * count_maxima(h);
          ok = true;
        }
      }
      if (!ok) ++est.redraws;
    }
    if (!ok)
      fail(Errc::retry_budget_exhausted, "no generic direction after " + std::to_string(kRetries) +
                                             " redraws for sample " + std::to_string(i));
    stats.push(value);
  }
  est.mean = stats.mean;
  est.stderr_mean = stats.stderr_mean();
  return est;
}

MaximaSample sample_mean_maxima(const PolygonalKnot& knot, int samples, std::uint64_t seed,
                                double eps) {
  eps = knot_eps(knot, eps);
  RunningStats stats;
  long redraws = 0;
  constexpr int kRetries = 64;
  for (int i = 0; i < samples; ++i) {
    bool ok = false;
    for (int retry = 0; retry < kRetries && !ok; ++retry) {
      const Vec3 u = rng::unit_sphere(rng::key(seed, i, retry));
      const auto h = heights(knot, u);
      if (!heights_distinct(h, eps)) {
        ++redraws;
        continue;
      }
      stats.push(static_cast<double>(count_maxima(h)));
      ok = true;
    }
    if (!ok) fail(Errc::retry_budget_exhausted, "tied heights persist after redraws");
  }
  return MaximaSample{stats.mean, stats.stderr_mean(), redraws};
}

std::optional<BridgeCertificate> bridge_certificate(const PolygonalKnot& knot, int budget,
                                                    std::uint64_t seed, double eps) {
  if (budget < 1) fail(Errc::invalid_argument, "budget must be at least 1");
  eps = knot_eps(knot, eps);

  int best_count = knot.size() + 1;
  Vec3 best_dir{0, 0, 1};

  auto inspect = [&](const Vec3& u) -> std::optional<Direction> {
    const auto h = heights(knot, u);
    if (!heights_distinct(h, eps)) return std::nullopt;
    const int m = count_maxima(h);
    if (m < best_count) {
      best_count = m;
      best_dir = u;
    }
    if (m == 1) return Direction(u);
    return std::nullopt;
  };

  const int lattice = std::max(1, budget / 2);
  const int refine = std::max(0, budget / 4);
  const int random_tail = budget - lattice - refine;

  for (int i = 0; i < lattice; ++i) {
    if (auto d = inspect(rng::fibonacci_dir(i, lattice)))
      return BridgeCertificate{*d, unknot_by_height(knot, *d, eps)};
  }
  // Jitter around the most promising direction seen so far.
  const double spread = 2.0 / std::sqrt(static_cast<double>(lattice));
  for (int i = 0; i < refine; ++i) {
    const Vec3 jitter = rng::gaussian3(rng::key(seed, 0x726566ULL, i)) * spread;
    const Vec3 u = normalized(best_dir + jitter);
    if (auto d = inspect(u)) return BridgeCertificate{*d, unknot_by_height(knot, *d, eps)};
  }
  for (int i = 0; i < random_tail; ++i) {
    if (auto d = inspect(rng::unit_sphere(rng::key(seed, 0x726e64ULL, i))))
      return BridgeCertificate{*d, unknot_by_height(knot, *d, eps)};
  }
  return std::nullopt;
}

}  // namespace polyknot
