#include "polyknot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace polyknot {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Mapper {
  double sx, sy, scale;
  double height;
  Vec2 map(const Vec2& p) const { return {(p.x - sx) * scale, height - (p.y - sy) * scale}; }
};

// Points along the projected curve between two cyclic positions (edge + t),
// including both endpoints.
std::vector<Vec2> piece_points(const KnotDiagram& d, double from, double to) {
  const int n = static_cast<int>(d.vertices.size());
  if (to <= from) to += n;
  std::vector<Vec2> pts;
  auto at = [&](double key) {
    const int e = static_cast<int>(std::floor(key)) % n;
    const double t = key - std::floor(key);
    return lerp(d.vertices[e], d.vertices[(e + 1) % n], t);
  };
  pts.push_back(at(from));
  for (int k = static_cast<int>(std::floor(from)) + 1; k <= static_cast<int>(std::ceil(to)) - 1; ++k) {
    const double key = k;
    if (key > from && key < to) pts.push_back(d.vertices[k % n]);
  }
  pts.push_back(at(to));
  return pts;
}

double piece_length(const std::vector<Vec2>& pts) {
  double len = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) len += dist(pts[i - 1], pts[i]);
  return len;
}

// Trim `amount` of arclength off one end of the piece.
void trim(std::vector<Vec2>& pts, double amount, bool at_start) {
  if (amount <= 0.0 || pts.size() < 2) return;
  if (!at_start) std::reverse(pts.begin(), pts.end());
  double left = amount;
  while (pts.size() >= 2) {
    const double seg = dist(pts[0], pts[1]);
    if (seg > left) {
      pts[0] = lerp(pts[0], pts[1], left / seg);
      break;
    }
    left -= seg;
    pts.erase(pts.begin());
  }
  if (!at_start) std::reverse(pts.begin(), pts.end());
}

}  // namespace

std::string render_svg(const KnotDiagram& diagram, const SvgStyle& style) {
  double lox = diagram.vertices[0].x, hix = lox, loy = diagram.vertices[0].y, hiy = loy;
  for (const Vec2& p : diagram.vertices) {
    lox = std::min(lox, p.x);
    hix = std::max(hix, p.x);
    loy = std::min(loy, p.y);
    hiy = std::max(hiy, p.y);
  }
  const double span = std::max(hix - lox, hiy - loy);
  const double margin = 0.06 * span;
  const double scale = style.width / (span + 2 * margin);
  Mapper m{lox - margin, loy - margin, scale, ((hiy - loy) + 2 * margin) * scale};
  const double stroke = style.stroke_width_frac * style.width;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(style.width) + "\" height=\"" +
         fmt(m.height) + "\" viewBox=\"0 0 " + fmt(style.width) + " " + fmt(m.height) + "\">\n";

  if (style.fill_faces) {
    // Unbounded face as background, bounded faces as filled cycles.
    out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(style.width) + "\" height=\"" + fmt(m.height) +
           "\" fill=\"#f4f2ec\"/>\n";
    for (int f = 0; f < diagram.face_count(); ++f) {
      const auto& face = diagram.faces[f];
      if (!face.bounded) continue;
      std::string path = "M";
      for (size_t i = 0; i < face.polygon.size(); ++i) {
        const Vec2 p = m.map(face.polygon[i]);
        path += (i == 0 ? " " : " L ") + fmt(p.x) + " " + fmt(p.y);
      }
      path += " Z";
      out += "<path d=\"" + path + "\" fill=\"" +
             (face.color == 0 ? std::string("#f4f2ec") : std::string("#9bb7d4")) +
             "\" stroke=\"none\"/>\n";
    }
  }

  const double gap = style.gap_frac * span;
  if (diagram.passages.empty()) {
    std::string path = "M";
    for (size_t i = 0; i < diagram.vertices.size(); ++i) {
      const Vec2 p = m.map(diagram.vertices[i]);
      path += (i == 0 ? " " : " L ") + fmt(p.x) + " " + fmt(p.y);
    }
    path += " Z";
    out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#1c1c1c\" stroke-width=\"" +
           fmt(stroke) + "\" stroke-linejoin=\"round\"/>\n";
  } else {
    const auto& ps = diagram.passages;
    for (size_t i = 0; i < ps.size(); ++i) {
      const auto& from = ps[i];
      const auto& to = ps[(i + 1) % ps.size()];
      auto pts = piece_points(diagram, from.edge + from.t, to.edge + to.t);
      const double len = piece_length(pts);
      const double cut = std::min(gap, 0.3 * len);
      if (from.under) trim(pts, cut, true);
      if (to.under) trim(pts, cut, false);
      std::string path = "M";
      for (size_t k = 0; k < pts.size(); ++k) {
        const Vec2 p = m.map(pts[k]);
        path += (k == 0 ? " " : " L ") + fmt(p.x) + " " + fmt(p.y);
      }
      out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#1c1c1c\" stroke-width=\"" +
             fmt(stroke) + "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
    }
  }

  if (style.mark) {
    const Vec2 p = m.map(*style.mark);
    out += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(2.2 * stroke) +
           "\" fill=\"#c23b22\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polyknot
