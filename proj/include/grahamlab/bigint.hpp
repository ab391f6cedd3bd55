#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals, plus a handful of small combinatorial helpers.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace grahamlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a computed object contradicts a closed form it must satisfy.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  Int r = 1;
  return r << static_cast<unsigned>(e);
}

inline Int int_pow(const Int& base, unsigned long long e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - (i - 1);
    r /= i;
  }
  return r;
}

// choose(n, 2) for machine integers, used in line-graph edge counting
inline Int pairs_of(unsigned long long d) {
  Int n = d;
  return n * (d ? d - 1 : 0) / 2;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor of n/d for d > 0, correct for negative n
inline Int floor_div(const Int& n, const Int& d) {
  Int q = n / d, r = n % d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

inline Int ceil_rat(const Rat& x) {
  Int n = boost::multiprecision::numerator(x);
  Int d = boost::multiprecision::denominator(x);
  return -floor_div(-n, d);
}

inline Int floor_rat(const Rat& x) {
  return floor_div(boost::multiprecision::numerator(x),
                   boost::multiprecision::denominator(x));
}

// floor(sqrt(num/den)) for nonnegative rationals
inline Int isqrt_rat(const Int& num, const Int& den) {
  if (num < 0 || den <= 0) throw std::invalid_argument("isqrt_rat: negative input");
  Int prod = num * den;
  return boost::multiprecision::sqrt(prod) / den;
}

}  // namespace grahamlab
