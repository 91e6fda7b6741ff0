#include "polyknot_cli/cli.hpp"

#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "polyknot/crofton.hpp"
#include "polyknot/curvature.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/generate.hpp"
#include "polyknot/hull2.hpp"
#include "polyknot/io.hpp"
#include "polyknot/isotopy.hpp"
#include "polyknot/quadrisecant.hpp"
#include "polyknot/svg.hpp"
#include "polyknot/verify.hpp"
#include "polyknot/version.hpp"

namespace polyknot::cli {

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  double eps_rel = 0.0;  // replaces the default 1e-9 relative tolerance when set
  std::string json_path;
  std::string svg_path;
  std::string out_path;
};

double knot_eps(const GlobalOpts& g, const PolygonalKnot& k) {
  return g.eps_rel > 0.0 ? g.eps_rel * k.bbox_diagonal() : 0.0;
}

void maybe_write_json(const GlobalOpts& g, const std::string& payload) {
  if (!g.json_path.empty()) write_file(g.json_path, payload);
}

std::optional<Direction> parse_direction(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  Vec3 v;
  if (std::sscanf(spec.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3)
    fail(Errc::invalid_argument, "direction must be given as x,y,z");
  return Direction(v);
}

int cmd_generate(const GlobalOpts& g, const std::string& kind, int n, double radius, int p, int q,
                 int samples, double R, double r, int steps) {
  PolygonalKnot knot = [&] {
    if (kind == "convex_ngon") return generate_convex_ngon({n, radius});
    if (kind == "torus_knot") return generate_torus_knot({p, q, samples, R, r});
    if (kind == "random_closed") return generate_random_closed({n}, g.seed);
    if (kind == "scrambled_unknot") return generate_scrambled_unknot({steps}, g.seed);
    fail(Errc::invalid_argument, "unknown kind " + kind);
  }();
  if (g.out_path.empty())
    std::cout << knot_to_json(knot) << "\n";
  else
    save_knot(knot, g.out_path);
  return 0;
}

int cmd_curvature(const GlobalOpts& g, const std::string& input) {
  const PolygonalKnot knot = load_knot(input);
  const AngleProfile prof = total_curvature(knot);
  std::printf("%.9f\n", prof.total);
  if (!g.json_path.empty()) {
    std::string payload = "{\"total\": ";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", prof.total);
    payload += buf;
    payload += ", \"external_angles\": [";
    for (size_t i = 0; i < prof.external_angles.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", prof.external_angles[i]);
      payload += (i ? "," : "") + std::string(buf);
    }
    payload += "]}";
    write_file(g.json_path, payload);
  }
  return 0;
}

int cmd_crofton(const GlobalOpts& g, const std::string& input, const std::string& mode, int N) {
  const PolygonalKnot knot = load_knot(input);
  const double eps = knot_eps(g, knot);
  std::string payload = "[";
  bool first = true;
  for (const CroftonMode m : {CroftonMode::plane_projection, CroftonMode::line_projection}) {
    if (mode != "both" && mode != crofton_mode_name(m) &&
        !(mode == "plane" && m == CroftonMode::plane_projection) &&
        !(mode == "line" && m == CroftonMode::line_projection))
      continue;
    const CroftonEstimate est = crofton_estimate(knot, m, N, g.seed, eps);
    std::printf("%s: mean %.9f stderr %.3e redraws %ld\n", crofton_mode_name(m), est.mean,
                est.stderr_mean, est.redraws);
    payload += (first ? "" : ",") + crofton_estimate_to_json(est);
    first = false;
  }
  payload += "]";
  maybe_write_json(g, payload);
  return 0;
}

int cmd_bridge(const GlobalOpts& g, const std::string& input, int budget) {
  const PolygonalKnot knot = load_knot(input);
  const auto cert = bridge_certificate(knot, budget, g.seed, knot_eps(g, knot));
  if (!cert) {
    std::printf("no single-maximum direction found in %d directions\n", budget);
    maybe_write_json(g, "null");
    return 0;
  }
  const Vec3 u = cert->direction.vec();
  std::printf("certificate: direction (%.9f, %.9f, %.9f), %zu moves to a triangle\n", u.x, u.y,
              u.z, cert->moves.moves.size());
  maybe_write_json(g, move_sequence_to_json(cert->moves));
  return 0;
}

int cmd_simplify(const GlobalOpts& g, const std::string& input, long budget) {
  const PolygonalKnot knot = load_knot(input);
  const auto [reduced, seq] = greedy_simplify(knot, budget, knot_eps(g, knot));
  if (reduced.size() == 3)
    std::printf("reduced to a triangle in %zu moves (unknot certified)\n", seq.moves.size());
  else
    std::printf("stalled at %d vertices after %zu moves (inconclusive)\n", reduced.size(),
                seq.moves.size());
  if (!g.out_path.empty()) save_knot(reduced, g.out_path);
  maybe_write_json(g, move_sequence_to_json(seq));
  return 0;
}

int cmd_diagram(const GlobalOpts& g, const std::string& input, const std::string& dir_spec,
                bool fill_faces) {
  const PolygonalKnot knot = load_knot(input);
  const KnotDiagram d = build_diagram(knot, parse_direction(dir_spec), g.seed, knot_eps(g, knot));
  const FaceColoring fc = color_faces(d);
  std::printf("crossings %d, faces %d, bounded white faces %zu%s\n", d.crossing_count(),
              d.face_count(), fc.white_bounded_faces.size(),
              fc.trivial_candidate ? " (trivial candidate)" : "");
  maybe_write_json(g, diagram_to_json(d));
  if (!g.svg_path.empty()) {
    SvgStyle style;
    style.fill_faces = fill_faces;
    if (!fc.white_interior_points.empty()) style.mark = fc.white_interior_points.front();
    write_file(g.svg_path, render_svg(d, style));
  }
  return 0;
}

int cmd_tricolor(const GlobalOpts& g, const std::string& input, const std::string& dir_spec) {
  const PolygonalKnot knot = load_knot(input);
  const KnotDiagram d = build_diagram(knot, parse_direction(dir_spec), g.seed, knot_eps(g, knot));
  const auto tri = tricolorable(d);
  if (tri)
    std::printf("tricolorable: yes (%d arcs%s)\n", d.arc_count,
                tri->uses_three_colors ? ", all three colors used" : "");
  else
    std::printf("tricolorable: no\n");
  maybe_write_json(g, tri ? tricoloring_to_json(d, *tri) : "null");
  return 0;
}

int cmd_quadrisecant(const GlobalOpts& g, const std::string& input, const std::string& filter,
                     int cap) {
  const PolygonalKnot knot = load_knot(input);
  const QuadrisecantScan scan = find_quadrisecants(
      knot, filter == "alternating" ? QuadFilter::alternating : QuadFilter::all, cap);
  long alternating = 0;
  for (const auto& rec : scan.records)
    if (rec.order == QuadOrderType::alternating) ++alternating;
  std::printf("%zu records (%ld alternating), %ld degenerate tuples skipped\n",
              scan.records.size(), alternating, scan.degenerate_tuples);
  maybe_write_json(g, quadrisecant_scan_to_json(scan));
  return 0;
}

int cmd_secondhull(const GlobalOpts& g, const std::string& input, int grid, int budget) {
  const PolygonalKnot knot = load_knot(input);
  const auto witness = second_hull_witness(knot, grid, budget, g.seed, knot_eps(g, knot));
  if (witness) {
    const auto& [o, hw] = *witness;
    std::printf("witness (%.9f, %.9f, %.9f): min crossing count %d over %ld planes\n", o.x, o.y,
                o.z, hw.min_count, hw.planes_tested);
    maybe_write_json(g, hull_witness_to_json(hw));
  } else {
    std::printf("no second-hull witness on a %d^3 grid\n", grid);
    maybe_write_json(g, "null");
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& input) {
  const PolygonalKnot knot = load_knot(input);
  VerifyOptions opts;
  opts.seed = g.seed;
  opts.eps = knot_eps(g, knot);
  const CertificateReport report = run_verification(knot, opts);
  for (const auto& rec : report.checks) {
    std::printf("%-28s %-12s %8.1f ms\n", rec.name.c_str(), verdict_name(rec.verdict),
                rec.runtime_ms);
  }
  std::printf("overall: %s\n", verdict_name(report.overall));
  maybe_write_json(g, report_to_json(report));
  return report_exit_code(report);
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"polyknot: polygonal knot geometry and certificate suites"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for every randomized search (echoed into reports)");
  app.add_option("--eps", g.eps_rel, "relative geometric tolerance (default 1e-9 of the bbox diagonal)");
  app.add_option("--json", g.json_path, "write a JSON result to this path");
  app.add_option("--svg", g.svg_path, "write an SVG rendering to this path");
  app.add_option("-o,--out", g.out_path, "write the resulting knot to this path");

  // generate
  auto* gen = app.add_subcommand("generate", "produce a fixture knot");
  std::string kind;
  int n = 4, p = 2, q = 3, samples = 60, steps = 100;
  double radius = 1.0, R = 2.0, r = 1.0;
  gen->add_option("--kind", kind, "convex_ngon | torus_knot | random_closed | scrambled_unknot")
      ->required();
  gen->add_option("--n", n, "vertex count (convex_ngon, random_closed)");
  gen->add_option("--radius", radius, "circumradius (convex_ngon)");
  gen->add_option("--p", p, "longitude winding (torus_knot)");
  gen->add_option("--q", q, "meridian winding (torus_knot)");
  gen->add_option("--samples", samples, "sample count (torus_knot)");
  gen->add_option("--R", R, "major radius (torus_knot)");
  gen->add_option("--r", r, "minor radius (torus_knot)");
  gen->add_option("--steps", steps, "scramble steps (scrambled_unknot)");

  std::string input, mode = "both", dir_spec, filter = "all";
  int N = 10000, budget = 10000, grid = 9;
  long simplify_budget = 1000000;
  bool fill_faces = false;

  auto* cur = app.add_subcommand("curvature", "total curvature of a knot");
  cur->add_option("input", input, "knot file")->required();

  auto* cro = app.add_subcommand("crofton", "projection-averaged curvature estimates");
  cro->add_option("input", input, "knot file")->required();
  cro->add_option("--mode", mode, "plane | line | both");
  cro->add_option("--N", N, "sample count");

  auto* bri = app.add_subcommand("bridge", "search for a single-maximum unknotting direction");
  bri->add_option("input", input, "knot file")->required();
  bri->add_option("--budget", budget, "directions to scan");

  auto* sim = app.add_subcommand("simplify", "greedy empty-triangle vertex removal");
  sim->add_option("input", input, "knot file")->required();
  sim->add_option("--budget", simplify_budget, "maximum number of moves");

  auto* dia = app.add_subcommand("diagram", "generic planar projection with crossings and faces");
  dia->add_option("input", input, "knot file")->required();
  dia->add_option("--dir", dir_spec, "projection direction x,y,z (searched when omitted)");
  dia->add_flag("--fill-faces", fill_faces, "chessboard-fill faces in the SVG");

  auto* tri = app.add_subcommand("tricolor", "arc 3-coloring certificate");
  tri->add_option("input", input, "knot file")->required();
  tri->add_option("--dir", dir_spec, "projection direction x,y,z (searched when omitted)");

  int cap = 200;
  auto* qua = app.add_subcommand("quadrisecant", "scan edge 4-tuples for common transversals");
  qua->add_option("input", input, "knot file")->required();
  qua->add_option("--filter", filter, "all | alternating");
  qua->add_option("--cap", cap, "edge-count cap for the O(n^4) sweep");

  auto* hul = app.add_subcommand("secondhull", "grid search for a second-hull witness point");
  hul->add_option("input", input, "knot file")->required();
  hul->add_option("--grid", grid, "grid resolution per axis");
  hul->add_option("--budget", budget, "random planes per grid point");

  auto* ver = app.add_subcommand("verify", "run the full certificate suite");
  ver->add_option("input", input, "knot file")->required();

  // Global flags (--seed, --json, -o, ...) may appear after the subcommand.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_generate(g, kind, n, radius, p, q, samples, R, r, steps);
    if (cur->parsed()) return cmd_curvature(g, input);
    if (cro->parsed()) return cmd_crofton(g, input, mode, N);
    if (bri->parsed()) return cmd_bridge(g, input, budget);
    if (sim->parsed()) return cmd_simplify(g, input, simplify_budget);
    if (dia->parsed()) return cmd_diagram(g, input, dir_spec, fill_faces);
    if (tri->parsed()) return cmd_tricolor(g, input, dir_spec);
    if (qua->parsed()) return cmd_quadrisecant(g, input, filter, cap);
    if (hul->parsed()) return cmd_secondhull(g, input, grid, budget);
    if (ver->parsed()) return cmd_verify(g, input);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand given\n";
  return 1;
}

}  // namespace polyknot::cli
