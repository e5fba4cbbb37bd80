#pragma once

#include "cuspidal/unipoly.hpp"

namespace cuspidal {

/// Rational function over Q in reduced form: gcd(num, den) = 1, den monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UniPoly::one()) {}
  explicit RationalFunction(UniPoly num) : num_(std::move(num)), den_(UniPoly::one()) {}
  RationalFunction(UniPoly num, UniPoly den);

  static RationalFunction constant(const Rational& c) {
    return RationalFunction(UniPoly(c));
  }
  static RationalFunction variable() { return RationalFunction(UniPoly::variable()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// ord_0(num) - ord_0(den); throws "order of zero" on the zero function.
  int order() const;

  /// Value at a point where the denominator does not vanish.
  Rational eval(const Rational& x) const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const = default;

 private:
  UniPoly num_, den_;
};

}  // namespace cuspidal
