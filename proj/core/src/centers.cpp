#include "orthocubic/centers.hpp"

#include "orthocubic/errors.hpp"
#include "orthocubic/locus.hpp"

namespace orthocubic {

BaryPoint known_center(const TriangleShape& t, CenterName name) {
  const Rational one(1), zero(0);
  switch (name) {
    case CenterName::vertex_a: return {one, zero, zero};
    case CenterName::vertex_b: return {zero, one, zero};
    case CenterName::vertex_c: return {zero, zero, one};
    case CenterName::centroid: return {one, one, one};
    case CenterName::incenter: return {t.a(), t.b(), t.c()};
    case CenterName::excenter_a: return {-t.a(), t.b(), t.c()};
    case CenterName::excenter_b: return {t.a(), -t.b(), t.c()};
    case CenterName::excenter_c: return {t.a(), t.b(), -t.c()};
    case CenterName::orthocenter:
      // Product form; degenerates gracefully to a vertex at a right angle.
      return {t.sc() * t.sb(), t.sc() * t.sa(), t.sa() * t.sb()};
    case CenterName::circumcenter:
      return {t.a2() * t.sa(), t.b2() * t.sb(), t.c2() * t.sc()};
    case CenterName::pivot: {
      const PivotCoefficients k = pivot_coefficients(t);
      return {k.k_a, k.k_b, k.k_c};
    }
  }
  fail(ErrorCode::unknown_center, "unknown center");
}

const std::vector<CenterName>& center_catalog() {
  static const std::vector<CenterName> catalog = {
      CenterName::vertex_a,   CenterName::vertex_b,   CenterName::vertex_c,
      CenterName::centroid,   CenterName::incenter,   CenterName::excenter_a,
      CenterName::excenter_b, CenterName::excenter_c, CenterName::orthocenter,
      CenterName::circumcenter, CenterName::pivot,
  };
  return catalog;
}

const char* center_key(CenterName name) {
  switch (name) {
    case CenterName::vertex_a: return "A";
    case CenterName::vertex_b: return "B";
    case CenterName::vertex_c: return "C";
    case CenterName::centroid: return "G";
    case CenterName::incenter: return "I";
    case CenterName::excenter_a: return "Ia";
    case CenterName::excenter_b: return "Ib";
    case CenterName::excenter_c: return "Ic";
    case CenterName::orthocenter: return "H";
    case CenterName::circumcenter: return "O";
    case CenterName::pivot: return "K";
  }
  return "?";
}

const char* center_description(CenterName name) {
  switch (name) {
    case CenterName::vertex_a: return "vertex A";
    case CenterName::vertex_b: return "vertex B";
    case CenterName::vertex_c: return "vertex C";
    case CenterName::centroid: return "centroid";
    case CenterName::incenter: return "incenter";
    case CenterName::excenter_a: return "excenter opposite A";
    case CenterName::excenter_b: return "excenter opposite B";
    case CenterName::excenter_c: return "excenter opposite C";
    case CenterName::orthocenter: return "orthocenter";
    case CenterName::circumcenter: return "circumcenter";
    case CenterName::pivot: return "cubic coefficient point (kA:kB:kC)";
  }
  return "?";
}

std::optional<CenterName> parse_center(std::string_view key) {
  for (CenterName name : center_catalog()) {
    if (key == center_key(name)) return name;
  }
  return std::nullopt;
}

}  // namespace orthocubic
