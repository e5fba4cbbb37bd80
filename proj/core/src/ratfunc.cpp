#include "cuspidal/ratfunc.hpp"

namespace cuspidal {

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::one();
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divided_exact(g);
    den_ = den_.divided_exact(g);
  }
  Rational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ = num_ * (1 / lc);
    den_ = den_ * (1 / lc);
  }
}

int RationalFunction::order() const {
  if (is_zero()) throw std::domain_error("order of zero");
  return num_.order_at_zero() - den_.order_at_zero();
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("pole of rational function");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

}  // namespace cuspidal
