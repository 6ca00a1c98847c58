#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "orthocubic/bary.hpp"
#include "orthocubic/triangle.hpp"

namespace orthocubic {

enum class CenterName {
  vertex_a,
  vertex_b,
  vertex_c,
  centroid,
  incenter,
  excenter_a,
  excenter_b,
  excenter_c,
  orthocenter,
  circumcenter,
  pivot,  // (kA : kB : kC), itself a member of the locus cubic
};

// Exact homogeneous coordinates:
//   centroid     (1 : 1 : 1)
//   incenter     (a : b : c), excenters with one sign flipped
//   orthocenter  ((a^2+b^2-c^2)(a^2+c^2-b^2) : .. : ..)  [vertex for a right
//                triangle, which still lies on the locus]
//   circumcenter (a^2(b^2+c^2-a^2) : b^2(c^2+a^2-b^2) : c^2(a^2+b^2-c^2))
BaryPoint known_center(const TriangleShape& t, CenterName name);

// Catalog order used by reports and sweeps.
const std::vector<CenterName>& center_catalog();

const char* center_key(CenterName name);        // short stable key, e.g. "H"
const char* center_description(CenterName name);
std::optional<CenterName> parse_center(std::string_view key);

}  // namespace orthocubic
