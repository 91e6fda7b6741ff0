#include <doctest.h>

#include "fixtures.hpp"
#include "polyknot/general_position.hpp"
#include "polyknot/io.hpp"
#include "polyknot/isotopy.hpp"
#include "polyknot/verify.hpp"

using namespace polyknot;

TEST_CASE("knot JSON round-trips bit-exactly") {
  const auto knot = perturb(fixtures::trefoil(), 1e-5, 3);
  const auto back = knot_from_json(knot_to_json(knot));
  CHECK(back == knot);
}

TEST_CASE("knot text round-trips bit-exactly") {
  const auto knot = perturb(fixtures::cinquefoil(), 1e-5, 4);
  const auto back = knot_from_text(knot_to_text(knot));
  CHECK(back == knot);
}

TEST_CASE("load_knot dispatches on content") {
  const auto knot = fixtures::square();
  write_file("/tmp/polyknot_io_a.json", knot_to_json(knot));
  write_file("/tmp/polyknot_io_b.txt", knot_to_text(knot));
  CHECK(load_knot("/tmp/polyknot_io_a.json") == knot);
  CHECK(load_knot("/tmp/polyknot_io_b.txt") == knot);
}

TEST_CASE("malformed knot files raise IoError") {
  CHECK_THROWS_WITH_AS(knot_from_json("{\"no_vertices\": 1}"), doctest::Contains("IoError"),
                       Error);
  CHECK_THROWS_WITH_AS(knot_from_text("1 2\n3 4\n"), doctest::Contains("IoError"), Error);
  CHECK_THROWS_AS(load_knot("/tmp/definitely_missing_polyknot_file"), Error);
}

TEST_CASE("digest is stable and input-sensitive") {
  const auto a = digest_hex("abc");
  CHECK(a == digest_hex("abc"));
  CHECK(a != digest_hex("abd"));
  CHECK(a.size() == 16);
}

TEST_CASE("move sequences survive a JSON round trip and replay") {
  const auto tri = fixtures::ngon(3);
  const auto [out, seq] = scramble(tri, 25, 11);
  const auto back = move_sequence_from_json(move_sequence_to_json(seq));
  CHECK(back.initial == seq.initial);
  CHECK(back.final == seq.final);
  REQUIRE(back.moves.size() == seq.moves.size());
  CHECK(replay(back) == out);
}

TEST_CASE("verification reports serialize deterministically") {
  const auto knot = fixtures::ngon(5);
  VerifyOptions opts;
  opts.seed = 9;
  opts.crofton_samples = 500;
  opts.cover_samples = 500;
  opts.bridge_budget = 200;
  opts.greedy_budget = 100;
  opts.hull_grid = 3;
  opts.hull_budget = 200;
  opts.equator_samples = 500;
  const auto r1 = run_verification(knot, opts);
  const auto r2 = run_verification(knot, opts);
  CHECK(report_to_json(r1) == report_to_json(r2));
  CHECK(r1.overall == Verdict::pass);
}

TEST_CASE("a figure-eight knot leaves the suite inconclusive but consistent") {
  VerifyOptions opts;
  opts.seed = 1;
  opts.crofton_samples = 2000;
  opts.cover_samples = 2000;
  opts.bridge_budget = 2000;
  opts.greedy_budget = 10000;
  opts.equator_samples = 20000;
  const auto report = run_verification(fixtures::figure_eight(), opts);
  CHECK(report.overall == Verdict::inconclusive);
  CHECK(report_exit_code(report) == 3);
  for (const auto& rec : report.checks) {
    CHECK(rec.verdict != Verdict::fail);
    if (rec.name == "certificate_consistency") CHECK(rec.verdict == Verdict::inconclusive);
  }
}

TEST_CASE("exit codes map verdicts as 0/2/3") {
  CertificateReport rep;
  rep.checks.push_back({});
  rep.overall = Verdict::pass;
  CHECK(report_exit_code(rep) == 0);
  rep.overall = Verdict::fail;
  CHECK(report_exit_code(rep) == 2);
  rep.overall = Verdict::inconclusive;
  CHECK(report_exit_code(rep) == 3);
}
