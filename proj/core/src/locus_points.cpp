#include "orthocubic/locus_points.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orthocubic/centers.hpp"
#include "orthocubic/errors.hpp"
#include "orthocubic/homology.hpp"

namespace orthocubic {

namespace {

bool is_vertexish(const BaryPoint& p) {
  return (p.alpha == 0) + (p.beta == 0) + (p.gamma == 0) == 2;
}

bool ratios_defined(const TriangleShape& t, const BaryPoint& p) {
  try {
    (void)ceva_product(t, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::size_t digit_size(const BaryPoint& canonical_point) {
  std::size_t n = numerator(canonical_point.alpha).str().size();
  n = std::max(n, numerator(canonical_point.beta).str().size());
  return std::max(n, numerator(canonical_point.gamma).str().size());
}

}  // namespace

std::vector<BaryPoint> chord_locus_points(const LocusCubic& cubic,
                                          std::size_t count) {
  const TriangleShape& t = cubic.triangle();
  // Coordinate growth per chord is roughly additive in digits when one
  // endpoint stays small; the cap keeps degenerate blowups out of the pool.
  constexpr std::size_t kMaxDigits = 96;
  const std::size_t max_pool = count * 8 + 64;

  std::vector<BaryPoint> pool;
  std::set<std::string> seen;
  std::vector<BaryPoint> emitted;
  std::set<std::string> emitted_keys;

  for (CenterName name : center_catalog()) {
    BaryPoint p = canonical(known_center(t, name));
    std::string key = canonical_string(p);
    if (seen.insert(key).second) pool.push_back(std::move(p));
  }

  for (std::size_t j = 1; j < pool.size() && emitted.size() < count; ++j) {
    for (std::size_t i = 0; i < j && emitted.size() < count; ++i) {
      BaryPoint third;
      try {
        third = cubic.third_intersection(pool[i], pool[j]);
      } catch (const Error&) {
        continue;  // tangent chord, chord on the cubic, or coincident pair
      }
      if (digit_size(third) > kMaxDigits) continue;
      std::string key = canonical_string(third);
      if (seen.insert(key).second && pool.size() < max_pool)
        pool.push_back(third);
      if (coordinate_sum(third) == 0) continue;
      if (is_vertexish(third)) continue;
      if (!ratios_defined(t, third)) continue;
      if (emitted_keys.insert(key).second) emitted.push_back(third);
    }
  }
  return emitted;
}

std::uint64_t SeededRng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::int64_t SeededRng::next_in(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational random_rational(SeededRng& rng) {
  return Rational(rng.next_in(-12, 12), rng.next_in(1, 8));
}

BaryPoint random_point(SeededRng& rng) {
  for (;;) {
    BaryPoint p{random_rational(rng), random_rational(rng), random_rational(rng)};
    if (is_zero_triple(p) || coordinate_sum(p) == 0) continue;
    return p;
  }
}

BaryPoint random_interior_point(SeededRng& rng) {
  BaryPoint p{Rational(rng.next_in(1, 12), rng.next_in(1, 8)),
              Rational(rng.next_in(1, 12), rng.next_in(1, 8)),
              Rational(rng.next_in(1, 12), rng.next_in(1, 8))};
  return normalize(p);
}

BaryPoint random_nonmember(SeededRng& rng, const LocusCubic& cubic) {
  for (;;) {
    BaryPoint p = random_point(rng);
    if (cubic.value(p) == 0) continue;
    if (is_vertexish(p)) continue;
    if (!ratios_defined(cubic.triangle(), p)) continue;
    return p;
  }
}

TriangleShape random_triangle(SeededRng& rng) {
  const Rational x(rng.next_in(1, 12), rng.next_in(1, 8));
  const Rational y(rng.next_in(1, 12), rng.next_in(1, 8));
  const Rational z(rng.next_in(1, 12), rng.next_in(1, 8));
  return TriangleShape::from_sides(y + z, z + x, x + y);
}

}  // namespace orthocubic
