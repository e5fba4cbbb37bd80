#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cuspidal {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& a) { return mpq_sgn(a.get_mpq_t()); }
inline int sign(const Integer& a) { return mpz_sgn(a.get_mpz_t()); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() <= 0)
    throw std::invalid_argument("bad rational literal: " + s);
  return r;
}

inline Rational rat_pow(Rational base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    base = 1 / base;
    e = -e;
  }
  Rational r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace cuspidal
