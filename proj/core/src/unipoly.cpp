#include "cuspidal/unipoly.hpp"

#include <sstream>
#include <utility>

namespace cuspidal {

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int n, const Rational& c) {
  if (n < 0) throw std::invalid_argument("negative monomial degree");
  if (c == 0) return UniPoly();
  std::vector<Rational> v(n + 1, Rational(0));
  v[n] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

const Rational& UniPoly::leading_coeff() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero");
  return c_.back();
}

int UniPoly::order_at_zero() const {
  if (c_.empty()) throw std::domain_error("order of zero");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  throw std::logic_error("untrimmed polynomial");
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::shifted(const Rational& a) const {
  // Horner: p(t+a) built from the top coefficient down.
  UniPoly r;
  UniPoly lin(std::vector<Rational>{a, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UniPoly(*it);
  return r;
}

Rational UniPoly::taylor_coeff(const Rational& a, int m) const {
  if (m < 0) throw std::invalid_argument("negative Taylor index");
  return shifted(a).coeff(m);
}

UniPoly UniPoly::reversed(int d) const {
  if (degree() > d) throw std::invalid_argument("reversal degree too small");
  std::vector<Rational> v(d + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[d - i] = c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& c) const {
  if (c == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  UniPoly r = one(), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quo;
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.c_[db];
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly UniPoly::divided_exact(const UniPoly& b) const {
  UniPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace {

using ZVec = std::vector<Integer>;

// Primitive integer image of a rational polynomial (content stripped,
// positive leading coefficient). Input must be nonzero and trimmed.
ZVec to_primitive_z(const std::vector<Rational>& c) {
  Integer den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  ZVec z(c.size());
  Integer cont = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    z[i] = c[i].get_num() * (den / c[i].get_den());
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), z[i].get_mpz_t());
  }
  if (sign(z.back()) < 0) cont = -cont;
  for (auto& x : z) x /= cont;
  return z;
}

ZVec pseudo_rem(const ZVec& a, const ZVec& b) {
  ZVec r = a;
  const int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    Integer lead = r[dr];
    if (sign(lead) != 0) {
      for (int i = 0; i < dr; ++i) r[i] *= lb;
      for (int j = 0; j < db; ++j) r[dr - db + j] -= lead * b[j];
    }
    r.pop_back();
    --dr;
    while (dr >= 0 && sign(r[dr]) == 0) {
      r.pop_back();
      --dr;
    }
  }
  return r;
}

void make_primitive(ZVec& z) {
  Integer cont = 0;
  for (const auto& x : z) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
  if (sign(z.back()) < 0) cont = -cont;
  for (auto& x : z) x /= cont;
}

}  // namespace

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Primitive PRS over Z keeps intermediate coefficients small.
  ZVec u = to_primitive_z(a.coeffs());
  ZVec v = to_primitive_z(b.coeffs());
  if (u.size() < v.size()) std::swap(u, v);
  while (true) {
    ZVec r = pseudo_rem(u, v);
    if (r.empty()) break;
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
  return UniPoly(std::move(c)).monic();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / c_.back());
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational ac = abs(c);
    if (first) {
      if (sign(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
    }
    if (i == 0 || ac != 1) {
      os << rat_str(ac);
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace cuspidal
