#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace fpos {

/// Exact fraction over arbitrary-precision integers, always kept in lowest terms
/// with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  return den < 0 ? Rational(-BigInt(num), -BigInt(den)) : Rational(num, den);
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders `q` as "n" for integers and "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  const BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

}  // namespace fpos
