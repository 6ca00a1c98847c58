#pragma once

#include <string>

#include "orthocubic/bary.hpp"
#include "orthocubic/triangle.hpp"

namespace orthocubic {

// Signed ratio in which a pedal foot divides its side, in the directed-ratio
// convention where concurrency means the product of the three equals -1.
using CevaRatio = Rational;

// Cleared-denominator form; for BC:
//   -(alpha*(a^2+c^2-b^2) + 2a^2*gamma) / (alpha*(a^2+b^2-c^2) + 2a^2*beta).
// Throws Error(foot_at_vertex) when either part vanishes (the foot sits on a
// vertex and one of the two directed-ratio conventions is undefined), and
// Error(point_at_infinity) for zero coordinate sum.
CevaRatio cevian_ratio(const TriangleShape& t, const BaryPoint& p, Side side);
double cevian_ratio(const TriangleShape& t, const BaryPointF& p, Side side);

// Product of the three signed ratios; equals -1 iff the cevians through the
// pedal feet concur. Propagates foot_at_vertex.
Rational ceva_product(const TriangleShape& t, const BaryPoint& p);
double ceva_product(const TriangleShape& t, const BaryPointF& p);

// Common point of the cevians A-footA, B-footB, C-footC, canonicalized.
// The third cevian's incidence is re-verified exactly. Errors:
// degenerate_cevian when P is a vertex, not_perspective when the Ceva
// product differs from -1, foot_at_vertex propagated.
BaryPoint perspector(const TriangleShape& t, const BaryPoint& p);

struct PerspectivityCheck {
  bool perspective = false;
  std::string diagnostic;  // empty when the Ceva condition was evaluated cleanly
};

// Exact decision with a reason string for degenerate inputs (never throws).
PerspectivityCheck check_orthohomological(const TriangleShape& t, const BaryPoint& p);

// Exact path: rational equality with -1. Degenerate P reports false.
bool is_orthohomological(const TriangleShape& t, const BaryPoint& p);

// Float path: |product + 1| <= tol; degenerate P reports false.
bool is_orthohomological(const TriangleShape& t, const BaryPointF& p,
                         double tol = 1e-9);

}  // namespace orthocubic
