#pragma once

#include <ostream>

namespace qdiv {

/// Writes an SVG figure for the field with parameter ell: the centered unit
/// square, the five ellipses and the points P, Q, R, S, I. Output is
/// byte-stable for fixed inputs (6 decimal digits, no timestamps).
void emit_figure(int ell, std::ostream& out);

} // namespace qdiv
