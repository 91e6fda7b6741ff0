#include "polyknot/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include <json.hpp>

#include "polyknot/crofton.hpp"
#include "polyknot/curvature.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/hull2.hpp"
#include "polyknot/io.hpp"
#include "polyknot/isotopy.hpp"
#include "polyknot/quadrisecant.hpp"
#include "polyknot/rng.hpp"
#include "polyknot/version.hpp"

namespace polyknot {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

void note_error(CheckRecord& rec, const Error& e) {
  rec.verdict = Verdict::fail;
  rec.notes.emplace_back("error", e.what());
}

}  // namespace

CertificateReport run_verification(const PolygonalKnot& knot, const VerifyOptions& opts) {
  CertificateReport report;
  report.input_digest = digest_hex(knot_to_json(knot));
  report.tool_version = kVersion;
  report.seed = opts.seed;

  auto last_mark = std::chrono::steady_clock::now();
  auto push_check = [&](CheckRecord& rec) {
    const auto now = std::chrono::steady_clock::now();
    rec.runtime_ms = std::chrono::duration<double, std::milli>(now - last_mark).count();
    last_mark = now;
    report.checks.push_back(std::move(rec));
  };

  const double phi_total = total_curvature(knot).total;

  // --- total curvature -------------------------------------------------
  {
    CheckRecord rec{"total_curvature", "sum of external angles of the closed curve"};
    rec.numbers = {{"phi_total", phi_total}, {"vertices", static_cast<double>(knot.size())}};
    push_check(rec);
  }

  // --- projection averages ---------------------------------------------
  for (const CroftonMode mode : {CroftonMode::plane_projection, CroftonMode::line_projection}) {
    CheckRecord rec{mode == CroftonMode::plane_projection ? "crofton_plane" : "crofton_line",
                    mode == CroftonMode::plane_projection
                        ? "total curvature equals the average projected curvature over directions"
                        : "total curvature equals pi times the average height-extremum count"};
    rec.seed = rng::key(opts.seed, 0x63726f66ULL, static_cast<int>(mode));
    try {
      const CroftonEstimate est = crofton_estimate(knot, mode, opts.crofton_samples, rec.seed, opts.eps);
      rec.tolerance = 3.0 * est.stderr_mean + 1e-9 * (1.0 + phi_total);
      rec.numbers = {{"estimate", est.mean},
                     {"stderr", est.stderr_mean},
                     {"phi_total", phi_total},
                     {"samples", static_cast<double>(est.samples)},
                     {"redraws", static_cast<double>(est.redraws)}};
      rec.verdict = std::abs(est.mean - phi_total) <= rec.tolerance ? Verdict::pass : Verdict::fail;
    } catch (const Error& e) {
      note_error(rec, e);
    }
    push_check(rec);
  }

  // --- lune-area identity ------------------------------------------------
  {
    CheckRecord rec{"slice_area_identity",
                    "direction lunes of height maxima have total area twice the total curvature"};
    rec.tolerance = 1e-9;
    double sum = 0.0;
    for (int i = 0; i < knot.size(); ++i) sum += slice_area(knot, i).area;
    rec.numbers = {{"lune_area_sum", sum}, {"two_phi", 2.0 * phi_total}};
    rec.verdict = std::abs(sum - 2.0 * phi_total) <= rec.tolerance ? Verdict::pass : Verdict::fail;
    push_check(rec);
  }

  // --- sampled double cover ----------------------------------------------
  {
    CheckRecord rec{"height_double_cover",
                    "mean local-maximum count over directions is total curvature / 2pi"};
    rec.seed = rng::key(opts.seed, 0x636f766572ULL);
    try {
      const MaximaSample ms = sample_mean_maxima(knot, opts.cover_samples, rec.seed, opts.eps);
      rec.tolerance = 3.0 * ms.stderr_mean + 1e-12;
      rec.numbers = {{"mean_maxima", ms.mean},
                     {"stderr", ms.stderr_mean},
                     {"phi_over_2pi", phi_total / kTwoPi},
                     {"redraws", static_cast<double>(ms.redraws)}};
      rec.verdict =
          std::abs(ms.mean - phi_total / kTwoPi) <= rec.tolerance ? Verdict::pass : Verdict::fail;
    } catch (const Error& e) {
      note_error(rec, e);
    }
    push_check(rec);
  }

  // --- triviality search --------------------------------------------------
  bool trivial_certified = false;
  {
    CheckRecord rec{"unknot_certificate",
                    "a replayable move sequence reaching a triangle certifies the unknot"};
    rec.seed = rng::key(opts.seed, 0x627269646765ULL);
    try {
      std::optional<MoveSequence> cert;
      std::string method;
      if (auto bridge = bridge_certificate(knot, opts.bridge_budget, rec.seed, opts.eps)) {
        cert = bridge->moves;
        method = "single-maximum height sweep";
      } else {
        auto [reduced, seq] = greedy_simplify(knot, opts.greedy_budget, opts.eps);
        if (reduced.size() == 3) {
          cert = seq;
          method = "greedy empty-triangle removal";
        }
      }
      if (cert) {
        const PolygonalKnot end = replay(*cert, opts.eps);  // throws if unsound
        trivial_certified = end.size() == 3;
        rec.numbers = {{"moves", static_cast<double>(cert->moves.size())}};
        rec.notes.emplace_back("method", method);
      }
      rec.flags = {{"certificate_found", trivial_certified}};
    } catch (const Error& e) {
      note_error(rec, e);
    }
    push_check(rec);
  }

  // --- diagram, chessboard, tricolorability -------------------------------
  bool nontrivial_certified = false;
  std::optional<KnotDiagram> diagram;
  std::optional<FaceColoring> coloring;
  {
    CheckRecord rec{"tricolorability",
                    "a valid non-monochromatic 3-coloring of arcs certifies a nontrivial knot"};
    rec.seed = rng::key(opts.seed, 0x646961ULL);
    try {
      diagram.emplace(build_diagram(knot, std::nullopt, rec.seed, opts.eps));
      const auto tri = tricolorable(*diagram);
      if (tri) {
        // Re-verify the crossing relations before trusting the certificate.
        for (const auto& c : diagram->crossings) {
          const int sum =
              tri->arc_colors[c.over_arc] + tri->arc_colors[c.under_in_arc] + tri->arc_colors[c.under_out_arc];
          if (sum % 3 != 0) {
            rec.verdict = Verdict::fail;
            rec.notes.emplace_back("error", "coloring violates a crossing relation");
          }
        }
        nontrivial_certified = rec.verdict == Verdict::pass;
        rec.flags.emplace_back("uses_three_colors", tri->uses_three_colors);
      }
      rec.flags.emplace_back("tricolorable", tri.has_value());
      rec.numbers = {{"crossings", static_cast<double>(diagram->crossing_count())},
                     {"arcs", static_cast<double>(diagram->arc_count)}};
    } catch (const Error& e) {
      note_error(rec, e);
    }
    push_check(rec);
  }

  {
    CheckRecord rec{"chessboard_faces",
                    "faces 2-color properly with the unbounded face white; faces = crossings + 2"};
    try {
      if (!diagram) fail(Errc::no_generic_direction, "no diagram available");
      coloring.emplace(color_faces(*diagram));
      const bool euler = diagram->face_count() == diagram->crossing_count() + 2;
      rec.numbers = {{"faces", static_cast<double>(diagram->face_count())},
                     {"crossings", static_cast<double>(diagram->crossing_count())},
                     {"bounded_white_faces", static_cast<double>(coloring->white_bounded_faces.size())}};
      rec.flags = {{"euler_identity", euler}, {"trivial_candidate", coloring->trivial_candidate}};
      rec.verdict = euler ? Verdict::pass : Verdict::fail;
    } catch (const Error& e) {
      note_error(rec, e);
    }
    push_check(rec);
  }

  {
    CheckRecord rec{"white_face_angular_length",
                    "angular length about a bounded white face point is at least 4pi in the projection"};
    rec.tolerance = 1e-9;
    try {
      if (diagram && coloring && !coloring->white_interior_points.empty()) {
        // Work in the projection plane, embedded at z = 0.
        std::vector<Vec3> flat;
        flat.reserve(diagram->vertices.size());
        for (const Vec2& p : diagram->vertices) flat.push_back({p.x, p.y, 0.0});
        const double phi_proj = total_curvature(flat, true).total;
        double min_psi = std::numeric_limits<double>::infinity();
        for (const Vec2& o2 : coloring->white_interior_points) {
          const double psi = angular_length(flat, Vec3{o2.x, o2.y, 0.0});
          min_psi = std::min(min_psi, psi);
          if (psi > phi_proj + 1e-9) {
            rec.verdict = Verdict::fail;
            rec.notes.emplace_back("error", "angular length exceeds projected total curvature");
          }
        }
        rec.numbers = {{"min_psi", min_psi}, {"phi_projection", phi_proj}};
        if (nontrivial_certified && min_psi < kFourPi - rec.tolerance) rec.verdict = Verdict::fail;
      } else if (nontrivial_certified) {
        rec.verdict = Verdict::fail;
        rec.notes.emplace_back("error", "certified nontrivial knot lacks a bounded white face");
      } else {
        rec.notes.emplace_back("skipped", "no bounded white face (trivial candidate)");
      }
    } catch (const Error& e) {
      note_error(rec, e);
    }
    push_check(rec);
  }

  // --- quadrisecants --------------------------------------------------------
  {
    CheckRecord rec{"quadrisecant_scan",
                    "alternating quadrisecants inscribe a quadrangle of total curvature 4pi"};
    rec.tolerance = 1e-9;
    try {
      const QuadrisecantScan scan = find_quadrisecants(knot, QuadFilter::all);
      long alternating = 0;
      double max_residual = 0.0;
      for (const auto& recq : scan.records) {
        max_residual = std::max(max_residual, recq.residual);
        if (recq.order != QuadOrderType::alternating) continue;
        ++alternating;
        std::array<QuadHit, 4> by_knot = recq.hits;
        std::sort(by_knot.begin(), by_knot.end(),
                  [](const QuadHit& a, const QuadHit& b) { return a.edge + a.t < b.edge + b.t; });
        std::vector<InscribeMark> marks;
        for (const auto& h : by_knot) marks.push_back({h.edge, h.t});
        const auto quad = inscribe(knot, marks);
        const double quad_phi = total_curvature(quad, true).total;
        if (std::abs(quad_phi - kFourPi) > rec.tolerance || quad_phi > phi_total + rec.tolerance) {
          rec.verdict = Verdict::fail;
          rec.notes.emplace_back("error", "inscribed quadrangle curvature is not 4pi");
        }
      }
      rec.numbers = {{"records", static_cast<double>(scan.records.size())},
                     {"alternating", static_cast<double>(alternating)},
                     {"max_residual", max_residual},
                     {"degenerate_tuples", static_cast<double>(scan.degenerate_tuples)},
                     {"endpoint_skips", static_cast<double>(scan.endpoint_skips)}};
      rec.flags = {{"alternating_found", alternating > 0}};
      if (rec.verdict == Verdict::pass && nontrivial_certified && alternating == 0)
        rec.verdict = Verdict::inconclusive;  // search exhausted, not an inequality failure
    } catch (const Error& e) {
      if (e.code() == Errc::knot_too_large) {
        rec.verdict = Verdict::inconclusive;  // scan refused, nothing was tested
        rec.notes.emplace_back("skipped", e.what());
      } else {
        note_error(rec, e);
      }
    }
    push_check(rec);
  }

  // --- second hull ------------------------------------------------------------
  {
    CheckRecord rec{"second_hull",
                    "every plane through a second-hull point crosses the knot at least 4 times; "
                    "its angular length is at least 4pi"};
    rec.seed = rng::key(opts.seed, 0x68756c6cULL);
    rec.tolerance = 1e-6;
    try {
      const auto witness = second_hull_witness(knot, opts.hull_grid, opts.hull_budget, rec.seed, opts.eps);
      rec.flags.emplace_back("witness_found", witness.has_value());
      if (witness) {
        const auto& [o, hw] = *witness;
        const double psi = angular_length(knot, o, opts.eps);
        rec.numbers = {{"min_count", static_cast<double>(hw.min_count)},
                       {"planes_tested", static_cast<double>(hw.planes_tested)},
                       {"psi", psi},
                       {"phi_total", phi_total}};
        if (hw.min_count < 4 || psi < kFourPi - rec.tolerance || psi > phi_total + 1e-9) {
          rec.verdict = Verdict::fail;
          rec.notes.emplace_back("error", "witness violates the crossing or angular-length chain");
        } else {
          const SphericalPolyline proj = radial_projection(knot, o, opts.eps);
          const SphericalCroftonResult sc =
              spherical_crofton_check(proj, opts.equator_samples, rng::key(rec.seed, 1));
          rec.numbers.emplace_back("radial_length", sc.length);
          rec.numbers.emplace_back("pi_mean_crossings", sc.pi_mean_crossings);
          rec.numbers.emplace_back("equator_stderr", sc.stderr_mean);
          if (std::abs(sc.length - sc.pi_mean_crossings) > 3.0 * sc.stderr_mean + 1e-9)
            rec.verdict = Verdict::fail;
        }
      } else if (nontrivial_certified) {
        rec.verdict = Verdict::inconclusive;
        rec.notes.emplace_back("skipped", "no witness found at this grid resolution");
      } else {
        rec.notes.emplace_back("skipped", "no witness; consistent with a trivial knot");
      }
    } catch (const Error& e) {
      note_error(rec, e);
    }
    push_check(rec);
  }

  // --- certificate consistency and the main bound ------------------------------
  {
    CheckRecord rec{"certificate_consistency",
                    "triviality and nontriviality certificates are mutually exclusive"};
    rec.flags = {{"trivial_certified", trivial_certified},
                 {"nontrivial_certified", nontrivial_certified}};
    if (trivial_certified && nontrivial_certified)
      rec.verdict = Verdict::fail;
    else if (!trivial_certified && !nontrivial_certified)
      rec.verdict = Verdict::inconclusive;
    push_check(rec);
  }
  {
    CheckRecord rec{"fary_milnor_bound",
                    "a certified nontrivial knot has total curvature at least 4pi"};
    rec.tolerance = 1e-9;
    rec.numbers = {{"phi_total", phi_total}, {"four_pi", kFourPi}};
    if (nontrivial_certified) {
      rec.verdict = phi_total >= kFourPi - rec.tolerance ? Verdict::pass : Verdict::fail;
    } else if (trivial_certified) {
      // Fenchel sanity on the certified unknot.
      rec.verdict = phi_total >= kTwoPi - rec.tolerance ? Verdict::pass : Verdict::fail;
    } else {
      rec.verdict = phi_total >= kFourPi - rec.tolerance ? Verdict::pass : Verdict::inconclusive;
    }
    push_check(rec);
  }

  report.overall = Verdict::pass;
  for (const auto& rec : report.checks) {
    if (rec.verdict == Verdict::fail) {
      report.overall = Verdict::fail;
      break;
    }
    if (rec.verdict == Verdict::inconclusive) report.overall = Verdict::inconclusive;
  }
  return report;
}

std::string report_to_json(const CertificateReport& report) {
  nlohmann::json j;
  j["input_digest"] = report.input_digest;
  j["tool_version"] = report.tool_version;
  j["seed"] = report.seed;
  j["overall"] = verdict_name(report.overall);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& rec : report.checks) {
    nlohmann::json c;
    c["name"] = rec.name;
    c["claim"] = rec.claim;
    c["verdict"] = verdict_name(rec.verdict);
    c["tolerance"] = rec.tolerance;
    c["seed"] = rec.seed;
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [k, v] : rec.numbers) values[k] = v;
    for (const auto& [k, v] : rec.flags) values[k] = v;
    for (const auto& [k, v] : rec.notes) values[k] = v;
    c["values"] = std::move(values);
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

int report_exit_code(const CertificateReport& report) {
  switch (report.overall) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 2;
    case Verdict::inconclusive: return 3;
  }
  return 2;
}

}  // namespace polyknot
