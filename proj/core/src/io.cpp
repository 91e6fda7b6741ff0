#include "polyknot/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyknot {

using nlohmann::json;

namespace {

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) fail(Errc::io_error, "expected a 3-element coordinate array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vertices_to_json(const std::vector<Vec3>& verts) {
  json arr = json::array();
  for (const Vec3& v : verts) arr.push_back(vec_to_json(v));
  return arr;
}

std::vector<Vec3> vertices_from_json(const json& arr) {
  if (!arr.is_array()) fail(Errc::io_error, "expected an array of vertices");
  std::vector<Vec3> verts;
  verts.reserve(arr.size());
  for (const auto& item : arr) verts.push_back(vec_from_json(item));
  return verts;
}

}  // namespace

std::string knot_to_json(const PolygonalKnot& knot) {
  json j;
  j["vertices"] = vertices_to_json(knot.vertices());
  return j.dump();
}

PolygonalKnot knot_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::io_error, std::string("invalid knot JSON: ") + e.what());
  }
  if (!j.contains("vertices")) fail(Errc::io_error, "knot JSON lacks a \"vertices\" field");
  return PolygonalKnot::from_vertices(vertices_from_json(j["vertices"]));
}

std::string knot_to_text(const PolygonalKnot& knot) {
  std::string out;
  for (const Vec3& v : knot.vertices()) {
    json line = json::array({v.x, v.y, v.z});
    // Reuse the shortest-round-trip number formatting, strip the brackets.
    std::string s = line.dump();
    s = s.substr(1, s.size() - 2);
    for (char& c : s)
      if (c == ',') c = ' ';
    out += s;
    out += '\n';
  }
  return out;
}

PolygonalKnot knot_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<Vec3> verts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Vec3 v;
    if (!(ls >> v.x >> v.y >> v.z)) fail(Errc::io_error, "bad vertex line: " + line);
    verts.push_back(v);
  }
  return PolygonalKnot::from_vertices(std::move(verts));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << content;
}

PolygonalKnot load_knot(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return knot_from_json(text);
  return knot_from_text(text);
}

void save_knot(const PolygonalKnot& knot, const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".txt")
    write_file(path, knot_to_text(knot));
  else
    write_file(path, knot_to_json(knot));
}

std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string move_sequence_to_json(const MoveSequence& seq) {
  json j;
  j["initial"] = {{"vertices", vertices_to_json(seq.initial.vertices())}};
  j["final"] = {{"vertices", vertices_to_json(seq.final.vertices())}};
  json moves = json::array();
  for (const IsotopyMove& mv : seq.moves) {
    json m;
    m["kind"] = mv.kind == IsotopyMove::Kind::add ? "add" : "remove";
    m["index"] = mv.index;
    m["point"] = vec_to_json(mv.point);
    m["evidence"] =
        json::array({vec_to_json(mv.evidence[0]), vec_to_json(mv.evidence[1]),
                     vec_to_json(mv.evidence[2])});
    moves.push_back(std::move(m));
  }
  j["moves"] = std::move(moves);
  return j.dump();
}

MoveSequence move_sequence_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::io_error, std::string("invalid move sequence JSON: ") + e.what());
  }
  MoveSequence seq{
      PolygonalKnot::from_vertices(vertices_from_json(j.at("initial").at("vertices"))),
      {},
      PolygonalKnot::from_vertices(vertices_from_json(j.at("final").at("vertices")))};
  for (const auto& m : j.at("moves")) {
    IsotopyMove mv;
    mv.kind = m.at("kind").get<std::string>() == "add" ? IsotopyMove::Kind::add
                                                       : IsotopyMove::Kind::remove;
    mv.index = m.at("index").get<int>();
    mv.point = vec_from_json(m.at("point"));
    const auto& ev = m.at("evidence");
    for (int k = 0; k < 3; ++k) mv.evidence[k] = vec_from_json(ev.at(k));
    seq.moves.push_back(std::move(mv));
  }
  return seq;
}

std::string crofton_estimate_to_json(const CroftonEstimate& est) {
  json j;
  j["mode"] = crofton_mode_name(est.mode);
  j["N"] = est.samples;
  j["seed"] = est.seed;
  j["mean"] = est.mean;
  j["stderr"] = est.stderr_mean;
  j["redraws"] = est.redraws;
  return j.dump();
}

std::string quadrisecant_scan_to_json(const QuadrisecantScan& scan) {
  json j;
  j["degenerate_tuples"] = scan.degenerate_tuples;
  j["endpoint_skips"] = scan.endpoint_skips;
  json records = json::array();
  for (const auto& rec : scan.records) {
    json r;
    r["line"] = {{"point", vec_to_json(rec.line.point)}, {"direction", vec_to_json(rec.line.dir)}};
    r["order_type"] = quad_order_name(rec.order);
    r["residual"] = rec.residual;
    json hits = json::array();
    for (const auto& hit : rec.hits) {
      hits.push_back({{"edge", hit.edge},
                      {"t", hit.t},
                      {"point", vec_to_json(hit.point)},
                      {"s", hit.s}});
    }
    r["hits"] = std::move(hits);
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j.dump();
}

std::string hull_witness_to_json(const HullWitness& witness) {
  json j;
  j["point"] = vec_to_json(witness.point);
  j["verdict"] =
      witness.verdict == HullWitness::Verdict::outside ? "outside" : "inside-sampled";
  j["planes_tested"] = witness.planes_tested;
  j["min_count"] = witness.min_count;
  j["seed"] = witness.seed;
  if (witness.witness_plane) {
    j["witness_plane"] = {{"normal", vec_to_json(witness.witness_plane->plane.normal.vec())},
                          {"offset", witness.witness_plane->plane.offset},
                          {"count", witness.witness_plane->count},
                          {"perturbed", witness.witness_plane->perturbed}};
  }
  return j.dump();
}

std::string diagram_to_json(const KnotDiagram& diagram) {
  json j;
  j["direction"] = vec_to_json(diagram.direction.vec());
  json verts = json::array();
  for (const Vec2& v : diagram.vertices) verts.push_back(json::array({v.x, v.y}));
  j["vertices_2d"] = std::move(verts);
  j["depths"] = diagram.depths;
  json crossings = json::array();
  for (const auto& c : diagram.crossings) {
    crossings.push_back({{"edges", json::array({c.edge_a, c.edge_b})},
                         {"point", json::array({c.position.x, c.position.y})},
                         {"t", json::array({c.t_a, c.t_b})},
                         {"over_edge", c.over_edge},
                         {"over_arc", c.over_arc},
                         {"under_in_arc", c.under_in_arc},
                         {"under_out_arc", c.under_out_arc}});
  }
  j["crossings"] = std::move(crossings);
  j["arc_count"] = diagram.arc_count;
  json arcs = json::array();
  if (diagram.passages.empty()) {
    arcs.push_back({{"id", 0}, {"whole_curve", true}});
  } else {
    // Arc m runs from the m-th under-passage to the next one in knot order.
    std::vector<json> starts(diagram.arc_count), ends(diagram.arc_count);
    for (const auto& p : diagram.passages) {
      if (!p.under) continue;
      const auto at = json{{"crossing", p.crossing}, {"edge", p.edge}, {"t", p.t}};
      ends[p.arc] = at;
      starts[diagram.crossings[p.crossing].under_out_arc] = at;
    }
    for (int a = 0; a < diagram.arc_count; ++a)
      arcs.push_back({{"id", a}, {"from", starts[a]}, {"to", ends[a]}});
  }
  j["arcs"] = std::move(arcs);
  json faces = json::array();
  for (int f = 0; f < diagram.face_count(); ++f) {
    const auto& face = diagram.faces[f];
    faces.push_back({{"bounded", face.bounded},
                     {"color", face.color == 0 ? "white" : "black"},
                     {"area", std::abs(face.signed_area)},
                     {"adjacent", face.adjacent}});
  }
  j["faces"] = std::move(faces);
  j["face_count"] = diagram.face_count();
  j["crossing_count"] = diagram.crossing_count();
  return j.dump();
}

std::string tricoloring_to_json(const KnotDiagram& diagram, const Tricoloring& coloring) {
  json j;
  j["arc_count"] = diagram.arc_count;
  j["colors"] = coloring.arc_colors;
  j["uses_three_colors"] = coloring.uses_three_colors;
  return j.dump();
}

}  // namespace polyknot
