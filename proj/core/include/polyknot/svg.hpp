#pragma once

#include <optional>
#include <string>

#include "polyknot/diagram.hpp"

namespace polyknot {

struct SvgStyle {
  double width = 480.0;             // canvas size in px, height follows aspect
  double stroke_width_frac = 0.006; // stroke width as a fraction of the span
  double gap_frac = 0.02;           // under-strand gap as a fraction of the span
  bool fill_faces = false;          // chessboard-fill every face
  std::optional<Vec2> mark;         // optional basepoint marker (diagram plane)
};

// Deterministic SVG 1.1 document. The curve is split at every crossing
// passage and under-strand ends are trimmed, so a diagram with c > 0
// crossings renders as 2c open strand paths; a crossing-free diagram is one
// closed path. With fill_faces the unbounded face becomes a background
// rectangle and each bounded face a filled path.
std::string render_svg(const KnotDiagram& diagram, const SvgStyle& style = {});

}  // namespace polyknot
