#include "orthocubic/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "orthocubic/errors.hpp"

namespace orthocubic {

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// [sign]digits[.digits][ (e|E)[sign]digits ]  ->  exact rational
std::optional<Rational> parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view tail = s.substr(e + 1);
    bool exp_neg = false;
    if (!tail.empty() && (tail.front() == '+' || tail.front() == '-')) {
      exp_neg = tail.front() == '-';
      tail.remove_prefix(1);
    }
    if (!all_digits(tail) || tail.size() > 6) return std::nullopt;
    exp10 = std::strtol(std::string(tail).c_str(), nullptr, 10);
    if (exp_neg) exp10 = -exp10;
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    digits = std::string(whole) + std::string(frac);
    frac_len = static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) return std::nullopt;
    digits = std::string(s);
  }
  if (digits.empty()) return std::nullopt;
  Int num(digits);
  long shift = exp10 - frac_len;
  Rational value(num, 1);
  if (shift > 0) {
    value *= Rational(pow(Int(10), static_cast<unsigned>(shift)), 1);
  } else if (shift < 0) {
    value /= Rational(pow(Int(10), static_cast<unsigned>(-shift)), 1);
  }
  return negative ? -value : value;
}

std::optional<Int> parse_int(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  Int v{std::string(s)};
  return negative ? -v : v;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den) fail(ErrorCode::bad_input, "malformed rational: " + std::string(text));
    if (*den == 0) fail(ErrorCode::bad_input, "zero denominator: " + std::string(text));
    // cpp_rational requires a positive denominator at construction
    if (*den < 0) {
      *num = -*num;
      *den = -*den;
    }
    return Rational(*num, *den);
  }
  if (auto value = parse_decimal(text)) return *value;
  fail(ErrorCode::bad_input, "malformed rational: " + std::string(text));
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) fail(ErrorCode::bad_input, "non-finite double");
  if (value == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5,1)
  // 53 doublings take the mantissa to an exact integer.
  Int m = Int(std::ldexp(mant, 53));
  int shift = exp - 53;
  Rational r(m, 1);
  if (shift > 0) {
    r *= Rational(Int(1) << shift, 1);
  } else if (shift < 0) {
    r /= Rational(Int(1) << -shift, 1);
  }
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int num = numerator(r);
  Int den = denominator(r);
  Int sn = sqrt(num);
  Int sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace orthocubic
