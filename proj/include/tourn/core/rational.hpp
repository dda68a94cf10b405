#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tourn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or a finite decimal such as "0.9" into an exact rational.
Rational parse_rational(std::string_view text);

/// Renders as "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Exact comparison of a^eps against b for a rational exponent eps = p/q > 0,
/// a, b >= 0: returns the sign of (a^eps - b) via a^p vs b^q.
int compare_power(long long a, const Rational& eps, long long b);

}  // namespace tourn
