#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace orthocubic {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar used on every identity-checking path. cpp_rational
// keeps the canonical form we rely on: reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q", or "p" when the denominator is 1. This is the wire format for all
// exact values in JSON and text reports.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", and decimal literals ("2.5", "-1e-3", ".25"); decimal
// input converts exactly. Throws Error(bad_input) on anything else or q = 0.
Rational rational_from_string(std::string_view text);

// Exact value of a finite double (every finite double is rational).
Rational rational_from_double(double value);

// Rational square root when one exists (numerator and denominator of the
// reduced input are both perfect squares); nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace orthocubic
