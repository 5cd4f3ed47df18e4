#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace stabset {

// Exact scalars. Every decision in the library is made over these; no
// floating point appears on any code path that affects a result.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Int rational_num(const Rational& q) { return numerator(q); }
inline Int rational_den(const Rational& q) { return denominator(q); }

inline std::string to_string(const Int& v) { return v.str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Int dot(const std::vector<Int>& a, const std::vector<std::int64_t>& x) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace stabset
