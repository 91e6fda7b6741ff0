#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyknot/knot.hpp"

namespace polyknot {

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);

// One entry of the certificate suite. Numbers/flags/notes are the recorded
// evidence; every randomized check carries its seed.
struct CheckRecord {
  CheckRecord() = default;
  CheckRecord(std::string name_, std::string claim_)
      : name(std::move(name_)), claim(std::move(claim_)) {}

  std::string name;
  std::string claim;
  Verdict verdict = Verdict::pass;
  double tolerance = 0.0;
  double runtime_ms = 0.0;  // wall time; printed by the CLI, excluded from the
                            // JSON report so reports stay byte-reproducible
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> numbers;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, std::string>> notes;
};

struct CertificateReport {
  std::string input_digest;
  std::string tool_version;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  Verdict overall = Verdict::pass;  // fail if any check failed, else
                                    // inconclusive if any check was, else pass
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  double eps = 0.0;            // absolute; 0 derives from the knot scale
  int crofton_samples = 20000;
  int cover_samples = 10000;
  int bridge_budget = 10000;
  long greedy_budget = 100000;
  int hull_grid = 9;
  int hull_budget = 10000;
  int equator_samples = 100000;
};

// Runs the whole certificate suite: curvature, the two projection averages,
// the lune-area and double-cover identities, triviality search, diagram
// chessboard + tricolorability, the quadrisecant scan with the inscribed
// 4pi quadrangle, and the second-hull witness chain. Deterministic given the
// input and seeds.
CertificateReport run_verification(const PolygonalKnot& knot, const VerifyOptions& opts = {});

std::string report_to_json(const CertificateReport& report);

// Exit code convention: 0 all pass, 2 some check failed, 3 no failure but
// some check inconclusive.
int report_exit_code(const CertificateReport& report);

}  // namespace polyknot
