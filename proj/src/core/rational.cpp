#include "tourn/core/rational.hpp"

#include "tourn/core/errors.hpp"

#include <cctype>

namespace tourn {

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw FormatError("empty integer in rational literal");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw FormatError("sign without digits in rational literal");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw FormatError("bad digit in rational literal: " + std::string(s));
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt p = parse_integer(text.substr(0, slash));
    BigInt q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw FormatError("zero denominator in rational literal");
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_integer(whole);
    BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac);
    if (f < 0) throw FormatError("bad fractional part in rational literal");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(w < 0 ? BigInt(-w) : w);
    r += Rational(f, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& r) {
  BigInt p = numerator_of(r);
  BigInt q = denominator_of(r);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

int compare_power(long long a, const Rational& eps, long long b) {
  BigInt p = numerator_of(eps);
  BigInt q = denominator_of(eps);
  if (p <= 0) throw DomainError("compare_power requires a positive exponent");
  // a^(p/q) <=> b   iff   a^p <=> b^q  (both sides non-negative)
  BigInt lhs = boost::multiprecision::pow(BigInt(a), static_cast<unsigned>(p));
  BigInt rhs = boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(q));
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace tourn
