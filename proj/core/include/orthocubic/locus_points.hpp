#pragma once

#include <cstdint>
#include <vector>

#include "orthocubic/bary.hpp"
#include "orthocubic/locus.hpp"
#include "orthocubic/triangle.hpp"

namespace orthocubic {

// Deterministic generator of exact rational members of the locus cubic: the
// catalog centers seed a pool, and chords between pool members contribute
// their third intersections. A line through two rational points of the cubic
// meets it in a third rational point, so the pool grows without rounding.
//
// Emitted points are canonical, finite, not vertices, and have all three
// cevian ratios defined; they are ordered by discovery, which is fixed by
// the catalog order. Returns fewer than `count` only if the construction
// saturates (it does not for the triangles exercised here).
std::vector<BaryPoint> chord_locus_points(const LocusCubic& cubic,
                                          std::size_t count);

// splitmix64; tiny, seed-stable across platforms, good enough for sampling
// test coordinates. Not a <random> engine on purpose: frozen expected values
// in tests must not depend on library distribution internals.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform-ish integer in [lo, hi], inclusive.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// Numerator in [-12, 12], denominator in [1, 8].
Rational random_rational(SeededRng& rng);

// Finite homogeneous point with small rational coordinates.
BaryPoint random_point(SeededRng& rng);

// Normalized point with all coordinates positive (inside the triangle).
BaryPoint random_interior_point(SeededRng& rng);

// Finite point with locus value != 0 and all cevian ratios defined.
BaryPoint random_nonmember(SeededRng& rng, const LocusCubic& cubic);

// Random valid triangle via the substitution a = y+z, b = z+x, c = x+y with
// x, y, z positive rationals; the strict triangle inequality is automatic.
TriangleShape random_triangle(SeededRng& rng);

}  // namespace orthocubic
