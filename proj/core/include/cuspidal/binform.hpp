#pragma once

#include <array>
#include <string>
#include <vector>

#include "cuspidal/rational.hpp"
#include "cuspidal/unipoly.hpp"

namespace cuspidal {

/// A point (a : b) of P^1 over Q, stored in the canonical representative
/// (1 : t0) or (0 : 1).
struct P1Point {
  Rational a, b;

  P1Point(Rational a_, Rational b_);
  static P1Point affine(const Rational& t0) { return P1Point(1, t0); }
  static P1Point infinity() { return P1Point(0, 1); }
  bool is_infinity() const { return a == 0; }
  bool operator==(const P1Point& o) const = default;
};

/// Homogeneous polynomial of fixed degree d in (s, t); coefficient i is the
/// coefficient of s^(d-i) t^i. The zero form keeps its degree tag.
class BinaryForm {
 public:
  BinaryForm(int degree, std::vector<Rational> coeffs);
  static BinaryForm zero(int degree);
  static BinaryForm constant(const Rational& c) { return BinaryForm(0, {c}); }
  static BinaryForm monomial(int degree, int tpow, const Rational& c = Rational(1));
  /// s^(degree - deg p) * homogenization of p (p in the variable t/s).
  static BinaryForm from_unipoly(const UniPoly& p, int degree);
  /// The linear form vanishing at the given parameter point.
  static BinaryForm vanishing_at(const P1Point& p);

  int degree() const { return deg_; }
  bool is_zero() const;
  bool is_constant_form() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int i) const { return c_[i]; }

  /// f(1, t) as a univariate polynomial.
  UniPoly dehomogenized() const;
  /// Multiplicity of the factor s (degree minus the t-degree of f(1,t)).
  int s_order() const;
  /// Multiplicity of the factor t.
  int t_order() const;
  /// Vanishing order of the form at a parameter point.
  int order_at(const P1Point& p) const;
  /// Root of a linear form (degree must be 1).
  P1Point root() const;

  Rational eval(const Rational& s, const Rational& t) const;
  Rational eval(const P1Point& p) const { return eval(p.a, p.b); }

  BinaryForm operator-() const;
  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(const Rational& c) const;
  BinaryForm pow(int e) const;
  bool operator==(const BinaryForm& o) const = default;

  BinaryForm derivative_s() const;
  BinaryForm derivative_t() const;

  /// Exact quotient; throws when the division leaves a remainder.
  BinaryForm divided_exact(const BinaryForm& o) const;

  /// Substitute (s, t) -> (m00 s + m01 t, m10 s + m11 t).
  BinaryForm compose_linear(const std::array<Rational, 4>& m) const;

  /// Scale so that the first nonzero coefficient (descending s-power) is 1.
  BinaryForm normalized() const;

  std::string str() const;

 private:
  int deg_;
  std::vector<Rational> c_;
};

inline BinaryForm operator*(const Rational& c, const BinaryForm& f) { return f * c; }

/// Greatest common divisor, normalized so its first nonzero coefficient is 1.
/// Throws "undefined gcd" when both inputs are zero.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

/// A line a x + b y + c z = 0 in P^2.
struct Line {
  Rational a, b, c;
  Line(Rational a_, Rational b_, Rational c_);
  bool operator==(const Line& o) const;
};

using ProjPoint = std::array<Rational, 3>;

bool proj_equal(const ProjPoint& p, const ProjPoint& q);
ProjPoint cross(const ProjPoint& p, const ProjPoint& q);
inline bool on_line(const Line& l, const ProjPoint& p) {
  return l.a * p[0] + l.b * p[1] + l.c * p[2] == 0;
}
/// The intersection point of two distinct lines.
ProjPoint meet(const Line& l, const Line& m);
/// The line through two distinct points.
Line join(const ProjPoint& p, const ProjPoint& q);

}  // namespace cuspidal
