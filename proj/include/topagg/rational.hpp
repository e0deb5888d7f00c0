// Exact arithmetic: arbitrary-precision integers and rationals.
//
// All costs, scores and average ranks in this library are exact; floating
// point only appears where an algorithm is defined in terms of real-valued
// randomness (partition thresholds, exponential clocks).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace topagg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

inline double to_double(const BigInt& value) {
  return value.convert_to<double>();
}

// "21/10"; integers print without the denominator ("4", not "4/1").
inline std::string fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Decimal shown with up to six significant digits, e.g. "5.8", "0.999".
inline std::string decimal_string(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", to_double(value));
  return buf;
}

// Canonical cost rendering: exact fraction plus decimal, "29/5 (5.8)".
inline std::string format_cost(const Rational& value) {
  return fraction_string(value) + " (" + decimal_string(value) + ")";
}

}  // namespace topagg
