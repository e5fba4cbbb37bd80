#pragma once

#include "cuspidal/rational.hpp"

namespace cuspidal {

/// An element p + q*sqrt(5) of Q(sqrt 5). The representation is unique
/// because sqrt(5) is irrational.
struct Surd5 {
  Rational p, q;

  Surd5() : p(0), q(0) {}
  Surd5(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {}

  static Surd5 sqrt5() { return Surd5(0, 1); }

  Surd5 operator-() const { return Surd5(-p, -q); }
  Surd5 operator+(const Surd5& o) const { return Surd5(p + o.p, q + o.q); }
  Surd5 operator-(const Surd5& o) const { return Surd5(p - o.p, q - o.q); }
  Surd5 operator*(const Surd5& o) const {
    return Surd5(p * o.p + 5 * q * o.q, p * o.q + q * o.p);
  }
  Surd5 operator/(const Surd5& o) const {
    Rational n = o.p * o.p - 5 * o.q * o.q;
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt 5)");
    return *this * Surd5(o.p / n, -o.q / n);
  }
  bool operator==(const Surd5& o) const = default;
};

/// Exact sign of p + q*sqrt(5), by rational comparison of p^2 and 5 q^2.
inline int surd_sign(const Surd5& x) {
  int sp = sign(x.p), sq = sign(x.q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: the larger of p^2 and 5 q^2 wins.
  Rational d = x.p * x.p - 5 * x.q * x.q;
  if (d == 0) throw std::logic_error("sqrt(5) is irrational");
  return sign(d) > 0 ? sp : sq;
}

}  // namespace cuspidal
