#pragma once

#include <vector>

#include "cuspidal/unipoly.hpp"

namespace cuspidal {

/// Polynomial in Q[a][b]: coefficient i (a polynomial in a) multiplies b^i.
/// Canonical form: no trailing zero coefficient.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> coeffs);
  /// Constant in b.
  explicit BiPoly(UniPoly c);

  static BiPoly zero() { return BiPoly(); }
  /// The polynomial a (the first variable).
  static BiPoly var_a() { return BiPoly(UniPoly::variable()); }
  /// The polynomial b (the second variable).
  static BiPoly var_b();

  bool is_zero() const { return c_.empty(); }
  /// Degree in b; -1 for the zero polynomial.
  int degree_b() const { return static_cast<int>(c_.size()) - 1; }
  /// Largest degree in a over all coefficients; -1 for zero.
  int degree_a() const;
  UniPoly coeff(int i) const;
  const std::vector<UniPoly>& coeffs() const { return c_; }
  bool is_constant() const;

  /// p(a, b) with the roles of a and b exchanged.
  BiPoly swapped() const;
  /// Substitute a univariate polynomial for b.
  UniPoly eval_b(const Rational& b) const;

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const = default;

  /// Exact quotient by a divisor whose leading b-coefficient is a nonzero
  /// constant; throws if the division leaves a remainder.
  BiPoly divided_exact(const BiPoly& d) const;

  /// Gcd of the b-coefficients (monic); 0 for the zero polynomial.
  UniPoly content() const;
  BiPoly primitive_part() const;

  /// Gcd via the primitive pseudo-remainder sequence in b, made primitive
  /// with monic content and monic leading b-coefficient when constant.
  static BiPoly gcd(const BiPoly& f, const BiPoly& g);

 private:
  void trim();
  std::vector<UniPoly> c_;
};

/// Resultant eliminating b: determinant of the Sylvester matrix of f and g
/// as polynomials in b over Q[a], via fraction-free elimination.
/// Requires both inputs nonzero with positive degree in b.
UniPoly resultant_b(const BiPoly& f, const BiPoly& g);

}  // namespace cuspidal
