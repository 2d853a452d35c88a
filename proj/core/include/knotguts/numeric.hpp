#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace knotguts {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q" with q > 0, or "p" when the value is an integer.
inline std::string to_string(const Rational& v) {
  const BigInt& q = boost::multiprecision::denominator(v);
  if (q == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + q.str();
}

inline BigInt floor_of(const Rational& v) {
  BigInt p = boost::multiprecision::numerator(v);
  BigInt q = boost::multiprecision::denominator(v);
  BigInt f = p / q;
  if (p < 0 && f * q != p) f -= 1;
  return f;
}

inline bool is_integer(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

}  // namespace knotguts
