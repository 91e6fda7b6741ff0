#pragma once

#include <stdexcept>
#include <string>

namespace polyknot {

enum class Errc {
  too_few_vertices,
  degenerate_edge,
  not_simple,
  missing_direction,
  magnitude_too_large,
  simplicity_lost,
  generation_failed,
  point_on_curve,
  antipodal_edge,
  marks_out_of_order,
  too_few_marks,
  tied_heights,
  multiple_local_maxima,
  blocked_triangle,
  degenerate_triangle,
  no_generic_direction,
  non_generic_direction,
  coloring_failed,
  retry_budget_exhausted,
  knot_too_large,
  io_error,
  invalid_argument,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::degenerate_edge: return "DegenerateEdge";
    case Errc::not_simple: return "NotSimple";
    case Errc::missing_direction: return "MissingDirection";
    case Errc::magnitude_too_large: return "MagnitudeTooLarge";
    case Errc::simplicity_lost: return "SimplicityLost";
    case Errc::generation_failed: return "GenerationFailed";
    case Errc::point_on_curve: return "PointOnCurve";
    case Errc::antipodal_edge: return "AntipodalEdge";
    case Errc::marks_out_of_order: return "MarksOutOfOrder";
    case Errc::too_few_marks: return "TooFewMarks";
    case Errc::tied_heights: return "TiedHeights";
    case Errc::multiple_local_maxima: return "MultipleLocalMaxima";
    case Errc::blocked_triangle: return "BlockedTriangle";
    case Errc::degenerate_triangle: return "DegenerateTriangle";
    case Errc::no_generic_direction: return "NoGenericDirection";
    case Errc::non_generic_direction: return "NonGenericDirection";
    case Errc::coloring_failed: return "ColoringFailed";
    case Errc::retry_budget_exhausted: return "RetryBudgetExhausted";
    case Errc::knot_too_large: return "KnotTooLarge";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, long detail = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  // Offending index (edge, vertex, ...) when the error pins one down, else -1.
  long detail() const noexcept { return detail_; }

 private:
  Errc code_;
  long detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, long detail = -1) {
  throw Error(code, msg, detail);
}

}  // namespace polyknot
