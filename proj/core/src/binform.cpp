#include "cuspidal/binform.hpp"

#include <sstream>
#include <utility>

namespace cuspidal {

P1Point::P1Point(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == 0 && b == 0) throw std::invalid_argument("(0:0) is not a point of P^1");
  if (a != 0) {
    b /= a;
    a = 1;
  } else {
    b = 1;
  }
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : deg_(degree), c_(std::move(coeffs)) {
  if (deg_ < 0) throw std::invalid_argument("negative form degree");
  if (static_cast<int>(c_.size()) != deg_ + 1)
    throw std::invalid_argument("coefficient count does not match form degree");
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(degree, std::vector<Rational>(degree + 1, Rational(0)));
}

BinaryForm BinaryForm::monomial(int degree, int tpow, const Rational& c) {
  if (tpow < 0 || tpow > degree) throw std::invalid_argument("bad monomial exponent");
  BinaryForm f = zero(degree);
  f.c_[tpow] = c;
  return f;
}

BinaryForm BinaryForm::from_unipoly(const UniPoly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("homogenization degree too small");
  std::vector<Rational> v(degree + 1, Rational(0));
  for (int i = 0; i <= p.degree(); ++i) v[i] = p.coeff(i);
  return BinaryForm(degree, std::move(v));
}

BinaryForm BinaryForm::vanishing_at(const P1Point& p) {
  // b s - a t vanishes at (a : b).
  return BinaryForm(1, {p.b, -p.a});
}

bool BinaryForm::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool BinaryForm::is_constant_form() const { return !is_zero() && deg_ == 0; }

UniPoly BinaryForm::dehomogenized() const { return UniPoly(c_); }

int BinaryForm::s_order() const {
  if (is_zero()) throw std::domain_error("s_order of zero form");
  return deg_ - dehomogenized().degree();
}

int BinaryForm::t_order() const {
  if (is_zero()) throw std::domain_error("t_order of zero form");
  for (int i = 0; i <= deg_; ++i)
    if (c_[i] != 0) return i;
  throw std::logic_error("unreachable");
}

int BinaryForm::order_at(const P1Point& p) const {
  if (is_zero()) throw std::domain_error("order of zero form");
  if (p.is_infinity()) return s_order();
  UniPoly u = dehomogenized().shifted(p.b);
  if (u.is_zero()) return deg_ + 1;  // cannot happen for nonzero forms
  return u.order_at_zero();
}

P1Point BinaryForm::root() const {
  if (deg_ != 1) throw std::invalid_argument("root requires a linear form");
  // c0 s + c1 t = 0  ->  (s : t) = (-c1 : c0)
  return P1Point(-c_[1], c_[0]);
}

Rational BinaryForm::eval(const Rational& s, const Rational& t) const {
  Rational r = 0, sp = 1;
  // sum c_i s^{d-i} t^i, evaluated as Horner in s with t powers accumulated.
  for (int i = deg_; i >= 0; --i) {
    r += c_[i] * sp * rat_pow(t, i);
    sp *= s;
  }
  return r;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm f = *this;
  for (auto& c : f.c_) c = -c;
  return f;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (deg_ != o.deg_) throw std::invalid_argument("degree mismatch in form sum");
  BinaryForm f = *this;
  for (int i = 0; i <= deg_; ++i) f.c_[i] += o.c_[i];
  return f;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm f = zero(deg_ + o.deg_);
  for (int i = 0; i <= deg_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j <= o.deg_; ++j) f.c_[i + j] += c_[i] * o.c_[j];
  }
  return f;
}

BinaryForm BinaryForm::operator*(const Rational& c) const {
  BinaryForm f = *this;
  for (auto& x : f.c_) x *= c;
  return f;
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  BinaryForm r = constant(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

BinaryForm BinaryForm::derivative_s() const {
  if (deg_ == 0) return zero(0);
  BinaryForm f = zero(deg_ - 1);
  for (int i = 0; i < deg_; ++i) f.c_[i] = c_[i] * Rational(deg_ - i);
  return f;
}

BinaryForm BinaryForm::derivative_t() const {
  if (deg_ == 0) return zero(0);
  BinaryForm f = zero(deg_ - 1);
  for (int i = 1; i <= deg_; ++i) f.c_[i - 1] = c_[i] * Rational(i);
  return f;
}

BinaryForm BinaryForm::divided_exact(const BinaryForm& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero form");
  if (is_zero()) {
    if (deg_ < o.deg_) throw std::domain_error("inexact form division");
    return zero(deg_ - o.deg_);
  }
  int so = s_order() - o.s_order();
  if (so < 0) throw std::domain_error("inexact form division");
  UniPoly q = dehomogenized().divided_exact(o.dehomogenized());
  return from_unipoly(q, deg_ - o.deg_);
}

BinaryForm BinaryForm::compose_linear(const std::array<Rational, 4>& m) const {
  BinaryForm snew(1, {m[0], m[1]});
  BinaryForm tnew(1, {m[2], m[3]});
  BinaryForm r = zero(deg_);
  for (int i = 0; i <= deg_; ++i) {
    if (c_[i] == 0) continue;
    r = r + snew.pow(deg_ - i) * tnew.pow(i) * c_[i];
  }
  return r;
}

BinaryForm BinaryForm::normalized() const {
  if (is_zero()) return *this;
  return *this * (1 / c_[t_order()]);
}

std::string BinaryForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= deg_; ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational ac = abs(c);
    if (first) {
      if (sign(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
    }
    int ps = deg_ - i, pt = i;
    bool unit = (ac == 1) && (ps + pt > 0);
    if (!unit) os << rat_str(ac);
    if (ps > 0) {
      if (!unit) os << "*";
      os << "s";
      if (ps > 1) os << "^" << ps;
      unit = false;
    }
    if (pt > 0) {
      if (!unit) os << "*";
      os << "t";
      if (pt > 1) os << "^" << pt;
    }
  }
  return os.str();
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("undefined gcd");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  int so = std::min(f.s_order(), g.s_order());
  UniPoly u = UniPoly::gcd(f.dehomogenized(), g.dehomogenized());
  return BinaryForm::from_unipoly(u, u.degree() + so).normalized();
}

Line::Line(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("zero line");
}

bool Line::operator==(const Line& o) const {
  return proj_equal({a, b, c}, {o.a, o.b, o.c});
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
  return p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] &&
         p[1] * q[2] == p[2] * q[1];
}

ProjPoint cross(const ProjPoint& p, const ProjPoint& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
          p[0] * q[1] - p[1] * q[0]};
}

ProjPoint meet(const Line& l, const Line& m) {
  ProjPoint p = cross({l.a, l.b, l.c}, {m.a, m.b, m.c});
  if (p[0] == 0 && p[1] == 0 && p[2] == 0)
    throw std::invalid_argument("meet of identical lines");
  return p;
}

Line join(const ProjPoint& p, const ProjPoint& q) {
  ProjPoint l = cross(p, q);
  if (l[0] == 0 && l[1] == 0 && l[2] == 0)
    throw std::invalid_argument("join of identical points");
  return Line(l[0], l[1], l[2]);
}

}  // namespace cuspidal
