#pragma once

// Shared helpers for the test binaries.

#include "orthocubic/bary.hpp"
#include "orthocubic/locus_points.hpp"

namespace orthocubic::testing {

// Normalized rational point whose coordinates stay in [-2, 3]: the "fixed
// box" population used wherever floats are compared against the exact path.
inline BaryPoint random_box_point(SeededRng& rng) {
  const Rational alpha(rng.next_in(-32, 48), 16);
  const Rational beta(rng.next_in(-32, 48), 16);
  return {alpha, beta, Rational(1) - alpha - beta};
}

}  // namespace orthocubic::testing
