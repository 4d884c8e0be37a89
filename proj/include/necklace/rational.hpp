#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace necklace {

/// Exact rational number. Always canonical: positive denominator,
/// gcd(|num|, den) = 1. All measure and cut-point arithmetic in this
/// project runs on these; no floating point is involved in decisions.
using Rational = mpq_class;

/// Canonical form of num/den; the sign is carried by the numerator.
/// Throws std::invalid_argument on a zero denominator.
inline Rational rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational(long num, long den = 1) {
  return rational(mpz_class(num), mpz_class(den));
}

/// 2^e for any integer e (negative exponents give dyadic fractions).
inline Rational pow2(long e) {
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, p) : Rational(p);
}

/// Largest power of two that is <= q. Requires q > 0.
inline Rational floor_pow2(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("floor_pow2 needs a positive value");
  long e = 0;
  Rational p(1);
  if (q >= 1) {
    while (p * 2 <= q) { p *= 2; ++e; }
  } else {
    while (p > q) { p /= 2; --e; }
  }
  return p;
}

inline mpz_class floor_rat(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline mpz_class ceil_rat(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Renders "p/q", with "/q" omitted when the denominator is 1.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optionally signed). Throws on malformed input.
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace necklace
