#pragma once

#include <string>

#include "polyknot/crofton.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/hull2.hpp"
#include "polyknot/isotopy.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/quadrisecant.hpp"

namespace polyknot {

// Knot files: JSON {"vertices": [[x,y,z], ...]} or plain text with one
// "x y z" line per vertex. Closure is implicit (last vertex connects back to
// the first). Numbers round-trip exactly.
std::string knot_to_json(const PolygonalKnot& knot);
PolygonalKnot knot_from_json(const std::string& text);
std::string knot_to_text(const PolygonalKnot& knot);
PolygonalKnot knot_from_text(const std::string& text);

// Dispatches on content (leading '{' means JSON).
PolygonalKnot load_knot(const std::string& path);
void save_knot(const PolygonalKnot& knot, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a 64-bit hex digest, used to tie reports to their input.
std::string digest_hex(const std::string& bytes);

std::string move_sequence_to_json(const MoveSequence& seq);
MoveSequence move_sequence_from_json(const std::string& text);

std::string crofton_estimate_to_json(const CroftonEstimate& est);
std::string quadrisecant_scan_to_json(const QuadrisecantScan& scan);
std::string hull_witness_to_json(const HullWitness& witness);
std::string diagram_to_json(const KnotDiagram& diagram);
std::string tricoloring_to_json(const KnotDiagram& diagram, const Tricoloring& coloring);

}  // namespace polyknot
