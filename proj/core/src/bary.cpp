#include "orthocubic/bary.hpp"

namespace orthocubic {

BaryPointF to_float(const BaryPoint& p) {
  return {to_double(p.alpha), to_double(p.beta), to_double(p.gamma)};
}

BaryPoint canonical(const BaryPoint& p) {
  if (is_zero_triple(p)) fail(ErrorCode::bad_input, "zero triple has no canonical form");
  // Clear denominators, then divide by the integer content.
  Int common_den = denominator(p.alpha);
  common_den = lcm(common_den, denominator(p.beta));
  common_den = lcm(common_den, denominator(p.gamma));
  Int x = numerator(p.alpha) * (common_den / denominator(p.alpha));
  Int y = numerator(p.beta) * (common_den / denominator(p.beta));
  Int z = numerator(p.gamma) * (common_den / denominator(p.gamma));
  Int content = gcd(gcd(abs(x), abs(y)), abs(z));
  x /= content;
  y /= content;
  z /= content;
  const Int& lead = x != 0 ? x : (y != 0 ? y : z);
  if (lead < 0) {
    x = -x;
    y = -y;
    z = -z;
  }
  return {Rational(x), Rational(y), Rational(z)};
}

std::string canonical_string(const BaryPoint& p) {
  BaryPoint c = canonical(p);
  return numerator(c.alpha).str() + ":" + numerator(c.beta).str() + ":" +
         numerator(c.gamma).str();
}

}  // namespace orthocubic
