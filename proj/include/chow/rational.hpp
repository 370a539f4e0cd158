#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

#include "chow/errors.hpp"

namespace chow {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. The backend keeps values normalized: denominator > 0
// and gcd(|numerator|, denominator) = 1 after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& q) { return numerator(q); }
inline Integer rational_den(const Rational& q) { return denominator(q); }

// Builds num/den with sign normalization. The backend's two-argument ctor
// rejects negative denominators, so go through division.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArgumentError("rational: zero denominator");
  Rational q(num);
  q /= Rational(den);
  return q;
}

inline Integer int_pow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// Renders "num/den", with "/den" omitted when den == 1.
inline std::string rational_to_string(const Rational& q) { return q.str(); }

// Strict parse of "num/den" or "num": optional sign, decimal digits, optional
// '/' and positive decimal digits. Anything else is rejected.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&text]() -> Rational {
    throw ArgumentError("rational: cannot parse \"" + text + "\"");
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t digits_begin = i;
  while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == digits_begin) return fail();
  Integer num(text.substr(digits_begin, i - digits_begin));
  if (negative) num = -num;
  if (i == n) return Rational(num);
  if (text[i] != '/') return fail();
  ++i;
  std::size_t den_begin = i;
  while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == den_begin || i != n) return fail();
  Integer den(text.substr(den_begin, n - den_begin));
  return make_rational(num, den);
}

}  // namespace chow
