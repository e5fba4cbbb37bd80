#include "cuspidal/bipoly.hpp"

#include <stdexcept>

namespace cuspidal {

BiPoly::BiPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

BiPoly::BiPoly(UniPoly c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

BiPoly BiPoly::var_b() {
  return BiPoly(std::vector<UniPoly>{UniPoly::zero(), UniPoly::one()});
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_a() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

UniPoly BiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return UniPoly::zero();
  return c_[i];
}

bool BiPoly::is_constant() const { return degree_b() <= 0 && degree_a() <= 0; }

BiPoly BiPoly::swapped() const {
  std::vector<UniPoly> out;
  out.resize(degree_a() + 1 > 0 ? degree_a() + 1 : 0);
  for (auto& p : out) p = UniPoly::zero();
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    for (int j = 0; j <= c_[i].degree(); ++j) {
      Rational v = c_[i].coeff(j);
      if (v == 0) continue;
      // term v a^j b^i becomes v a^i b^j
      std::vector<Rational> mono(i + 1, Rational(0));
      mono[i] = v;
      out[j] = out[j] + UniPoly(std::move(mono));
    }
  }
  return BiPoly(std::move(out));
}

UniPoly BiPoly::eval_b(const Rational& b) const {
  UniPoly r;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * b + c_[i];
  return r;
}

BiPoly BiPoly::operator-() const {
  std::vector<UniPoly> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return BiPoly(std::move(out));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  std::vector<UniPoly> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c_.size()) out[i] = out[i] + c_[i];
    if (i < o.c_.size()) out[i] = out[i] + o.c_[i];
  }
  return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (is_zero() || o.is_zero()) return BiPoly();
  std::vector<UniPoly> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = out[i + j] + c_[i] * o.c_[j];
  return BiPoly(std::move(out));
}

BiPoly BiPoly::divided_exact(const BiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!d.c_.back().is_constant())
    throw std::domain_error("divisor leading coefficient not constant in b");
  if (is_zero()) return BiPoly();
  Rational lead = d.c_.back().coeff(0);
  const int dd = d.degree_b();
  std::vector<UniPoly> rem = c_;
  std::vector<UniPoly> q(degree_b() - dd + 1 > 0 ? degree_b() - dd + 1 : 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    UniPoly f = rem[i] * (1 / lead);
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - f * d.c_[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw std::domain_error("inexact bivariate division");
  return BiPoly(std::move(q));
}

UniPoly BiPoly::content() const {
  UniPoly g;
  for (const auto& c : c_) g = UniPoly::gcd(g, c);
  return g;
}

BiPoly BiPoly::primitive_part() const {
  if (is_zero()) return BiPoly();
  UniPoly cont = content();
  std::vector<UniPoly> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].divided_exact(cont);
  return BiPoly(std::move(out));
}

namespace {

// Pseudo-remainder of f by g in the variable b: prem = lc(g)^(df-dg+1) f mod g.
BiPoly pseudo_rem(BiPoly f, const BiPoly& g) {
  const int dg = g.degree_b();
  const UniPoly& lg = g.coeffs().back();
  while (!f.is_zero() && f.degree_b() >= dg) {
    const int df = f.degree_b();
    const UniPoly lf = f.coeffs().back();
    // f <- lg * f - lf * b^(df-dg) * g
    std::vector<UniPoly> shift(df - dg + 1);
    shift[df - dg] = lf;
    f = BiPoly([&] {
      std::vector<UniPoly> out(f.coeffs().size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs()[i] * lg;
      return out;
    }()) - BiPoly(std::move(shift)) * g;
    if (f.degree_b() >= df) throw std::logic_error("pseudo-remainder did not reduce");
  }
  return f;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() && g.is_zero()) return BiPoly();
  if (f.is_zero()) return g.primitive_part();
  if (g.is_zero()) return f.primitive_part();
  UniPoly cont = UniPoly::gcd(f.content(), g.content());
  BiPoly a = f.primitive_part();
  BiPoly b = g.primitive_part();
  if (a.degree_b() < b.degree_b()) std::swap(a, b);
  while (!b.is_zero()) {
    BiPoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree_b() == 0) {
    // Result is univariate in a: fold in the content and make it monic.
    UniPoly u = a.coeff(0) * cont;
    return BiPoly(u.monic());
  }
  // Primitive in b; scale so the leading b-coefficient is monic.
  std::vector<UniPoly> out(a.coeffs().size());
  Rational inv = 1 / a.coeffs().back().leading_coeff();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] * cont * inv;
  return BiPoly(std::move(out));
}

UniPoly resultant_b(const BiPoly& f, const BiPoly& g) {
  const int m = f.degree_b(), n = g.degree_b();
  if (m < 1 || n < 1) throw std::domain_error("resultant needs positive b-degrees");
  const int size = m + n;
  // Sylvester matrix over Q[a].
  std::vector<std::vector<UniPoly>> s(size, std::vector<UniPoly>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  // Bareiss fraction-free elimination; exact divisions stay in Q[a].
  UniPoly prev = UniPoly::one();
  int sign_flips = 0;
  for (int k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      int p = -1;
      for (int r = k + 1; r < size; ++r)
        if (!s[r][k].is_zero()) {
          p = r;
          break;
        }
      if (p < 0) return UniPoly::zero();
      std::swap(s[k], s[p]);
      ++sign_flips;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j)
        s[i][j] = (s[k][k] * s[i][j] - s[i][k] * s[k][j]).divided_exact(prev);
    prev = s[k][k];
  }
  UniPoly det = s[size - 1][size - 1];
  return (sign_flips % 2) ? -det : det;
}

}  // namespace cuspidal
