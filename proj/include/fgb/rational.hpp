#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace fgb {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator (cpp_rational maintains both invariants).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(BigInt base, std::uint64_t exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

/// (2r-1)^k for signed k, as an exact rational.
inline Rational lattice_pow(int two_r_minus_1, std::int64_t k) {
  const BigInt p = int_pow(two_r_minus_1, static_cast<std::uint64_t>(k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(1, p);
}

/// "num/den" decimal serialization, e.g. "3/19"; integers print as "n/1".
inline std::string rational_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double rational_to_double(const Rational& q) {
  return q.convert_to<double>();
}

}  // namespace fgb
