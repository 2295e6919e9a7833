// Figure emission: the Mor-complex grid as TSV/SVG and the slope-n line
// lift with half-integer lattice punctures. All output is byte-stable.
#pragma once

#include <string>

#include "bnkit/field.hpp"

namespace bnkit {

enum class GridFormat { Tsv, Svg };

// Generators of the pairing complex for the n-twist closure placed at
// (h, q), with unit and xH edges marked. Requires n even, |n| <= 12.
std::string emit_grid(int n, FieldChar c, GridFormat format);

// The line of slope n through (1/4, 1/8) in the plane punctured at the
// half-integer lattice. Data form: exact rational line endpoints, slope,
// and the punctures inside the drawing window.
std::string curve_lift_data(int n);
std::string curve_lift_svg(int n);

}  // namespace bnkit
