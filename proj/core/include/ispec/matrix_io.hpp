#pragma once

#include <iosfwd>

#include "ispec/interval_matrix.hpp"

namespace ispec {

// Text format: a "rows cols" line, then rows * cols whitespace-separated
// entries, "lo,hi" for real matrices and "relo,rehi,imlo,imhi" for complex
// ones. Endpoints are written with 17 significant digits so they round-trip.

void write_matrix(std::ostream& os, const IntervalMatrix& a);
void write_matrix(std::ostream& os, const RectMatrix& a);

/// Throws std::runtime_error on malformed input.
IntervalMatrix read_interval_matrix(std::istream& is);
RectMatrix read_rect_matrix(std::istream& is);

}  // namespace ispec
