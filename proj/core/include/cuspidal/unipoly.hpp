#pragma once

#include <string>
#include <vector>

#include "cuspidal/rational.hpp"

namespace cuspidal {

/// Univariate polynomial over Q, coefficients in ascending powers of t.
/// Canonical form: no trailing zero coefficient; the zero polynomial has
/// an empty coefficient vector and degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& c);
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(Rational(1)); }
  static UniPoly variable() { return monomial(1); }
  static UniPoly monomial(int n, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 stands for the degree of the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading_coeff() const;

  /// Valuation at t = 0; throws on the zero polynomial.
  int order_at_zero() const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  /// p(t + a)
  UniPoly shifted(const Rational& a) const;
  /// Coefficient of (t - a)^m in the Taylor expansion at a.
  Rational taylor_coeff(const Rational& a, int m) const;
  /// Coefficients reversed as a degree-d form: t^d * p(1/t); requires degree() <= d.
  UniPoly reversed(int d) const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& c) const;
  UniPoly pow(int e) const;
  bool operator==(const UniPoly& o) const = default;

  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  /// Exact quotient; throws if the division leaves a remainder.
  UniPoly divided_exact(const UniPoly& b) const;
  /// Monic gcd (1 for coprime inputs); gcd(0,0) = 0.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);
  UniPoly monic() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline UniPoly operator*(const Rational& c, const UniPoly& p) { return p * c; }

}  // namespace cuspidal
