#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "gradcount/errors.hpp"

namespace gradcount {

// Counts grow like m^{|G|-1}, so every counting path works in exact unbounded
// integers; rationals appear only in the asymptotic polynomials.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) by the multiplicative formula.  The pending denominator is reduced
// by gcd before each multiply and divided out first, so intermediates stay
// near the size of the result.
inline Int binomial(const Int& n, const Int& k_arg) {
  using boost::multiprecision::gcd;
  if (n < 0 || k_arg < 0 || k_arg > n) return 0;
  Int k = k_arg;
  if (n - k < k) k = n - k;
  Int result = 1;
  Int numerator = n - k;
  for (Int i = 1; i <= k; ++i) {
    ++numerator;  // n - k + i
    Int g = gcd(numerator, i);
    result /= i / g;  // exact: the leftover denominator divides the running product
    result *= numerator / g;
  }
  return result;
}

inline Int factorial(std::uint64_t n) {
  Int r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int int_pow(const Int& base, std::uint64_t e) {
  Int r = 1;
  Int b = base;
  while (e != 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return r;
}

inline std::uint64_t checked_uint64(const Int& v, const char* what) {
  if (v < 0 || v > Int(std::numeric_limits<std::uint64_t>::max()))
    throw domain_error(std::string(what) + " does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

}  // namespace gradcount
