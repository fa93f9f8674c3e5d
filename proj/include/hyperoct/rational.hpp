#pragma once

// Arbitrary-precision integers and rationals. GMP keeps every mpq_class in
// lowest terms with a positive denominator, which is exactly the invariant we
// need, so we use it directly rather than wrapping it.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hyperoct {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "3", "-1/2"
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigInt factorial(long k) {
  BigInt r = 1;
  for (long i = 2; i <= k; ++i) r *= i;
  return r;
}

inline BigInt pow2(long k) {
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(k);
  return r;
}

}  // namespace hyperoct
