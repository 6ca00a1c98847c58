#pragma once

#include <iosfwd>
#include <string>

#include "orthocubic/locus.hpp"
#include "orthocubic/trace.hpp"

namespace orthocubic {

// Shortest round-trip decimal form of a double; stable across runs.
std::string format_double(double value);

// Columns polyline_id,x,y with a header row and LF line endings.
void write_csv(const TracedCurve& curve, std::ostream& out);

// SVG 1.1, viewBox equal to the bbox, one path element per polyline,
// triangle edges drawn and the centers H, I, O, G marked with labels.
void write_svg(const TracedCurve& curve, const LocusCubic& cubic,
               std::ostream& out);

}  // namespace orthocubic
