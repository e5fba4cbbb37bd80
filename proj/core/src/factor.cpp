#include "cuspidal/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cuspidal {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p a small odd prime. Polynomials are coefficient
// vectors in ascending order with no trailing zeros.
// ---------------------------------------------------------------------------

using PVec = std::vector<long>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long pinv(long a, long p) {
  long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

PVec pmul(const PVec& a, const PVec& b, long p) {
  if (a.empty() || b.empty()) return {};
  PVec c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  ptrim(c);
  return c;
}

void pdivmod(const PVec& a, const PVec& b, PVec& q, PVec& r, long p) {
  r = a;
  ptrim(r);
  q.clear();
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 >= db) q.assign(r.size() - db, 0);
  long inv = pinv(b.back(), p);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    long f = r[i] * inv % p;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = ((r[i - db + j] - f * b[j]) % p + p) % p;
  }
  ptrim(r);
}

PVec pmod(const PVec& a, const PVec& b, long p) {
  PVec q, r;
  pdivmod(a, b, q, r, p);
  return r;
}

PVec pgcd(PVec a, PVec b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PVec r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = pinv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
  }
  return a;
}

PVec ppowmod_x(long e, const PVec& f, long p) {
  // x^e mod f
  PVec r{1}, b{0, 1};
  b = pmod(b, f, p);
  while (e > 0) {
    if (e & 1) r = pmod(pmul(r, b, p), f, p);
    b = pmod(pmul(b, b, p), f, p);
    e >>= 1;
  }
  return r;
}

PVec pmonic(PVec a, long p) {
  ptrim(a);
  if (a.empty()) return a;
  long inv = pinv(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  return a;
}

PVec pderiv(const PVec& a, long p) {
  PVec d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<long>(i % p) * a[i] % p);
  ptrim(d);
  return d;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<PVec> berlekamp(const PVec& f, long p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {f};
  // Columns of the Frobenius matrix: x^{p i} mod f.
  PVec xp = ppowmod_x(p, f, p);
  std::vector<PVec> pow(n);
  pow[0] = {1};
  for (int i = 1; i < n; ++i) pow[i] = pmod(pmul(pow[i - 1], xp, p), f, p);
  // M - I, stored row-major: entry (row, col) = coeff of x^row in pow[col].
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < pow[col].size(); ++row) m[row][col] = pow[col][row];
    m[col][col] = ((m[col][col] - 1) % p + p) % p;
  }
  // Kernel basis via Gaussian elimination.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    long inv = pinv(m[row][col], p);
    for (auto& x : m[row]) x = x * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      long fac = m[r][col];
      for (int j = 0; j < n; ++j) m[r][j] = ((m[r][j] - fac * m[row][j]) % p + p) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<PVec> kernel;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    PVec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = (p - m[r][free]) % p;
    ptrim(v);
    kernel.push_back(std::move(v));
  }
  const std::size_t want = kernel.size();  // number of irreducible factors
  std::vector<PVec> factors{f};
  for (const PVec& v : kernel) {
    if (factors.size() == want) break;
    if (v.size() <= 1) continue;  // the constant vector never splits
    std::vector<PVec> next;
    for (const PVec& u : factors) {
      PVec rem = u;
      for (long c = 0; c < p && rem.size() > 1; ++c) {
        PVec vc = v;
        if (vc.empty()) vc.push_back(0);
        vc[0] = ((vc[0] - c) % p + p) % p;
        ptrim(vc);
        PVec g = pgcd(rem, vc, p);
        if (g.size() > 1 && g.size() < rem.size()) {
          next.push_back(g);
          PVec q, r0;
          pdivmod(rem, g, q, r0, p);
          rem = pmonic(q, p);
        }
      }
      if (rem.size() > 1) next.push_back(rem);
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/m)[x] with bignum modulus, for Hensel lifting. Monic
// divisors only. Coefficients stored in [0, m).
// ---------------------------------------------------------------------------

using ZVec = std::vector<Integer>;

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zreduce(ZVec a, const Integer& m) {
  for (auto& x : a) {
    x %= m;
    if (sign(x) < 0) x += m;
  }
  ztrim(a);
  return a;
}

ZVec zmul(const ZVec& a, const ZVec& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZVec c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return zreduce(std::move(c), m);
}

ZVec zadd(const ZVec& a, const ZVec& b, const Integer& m) {
  ZVec c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return zreduce(std::move(c), m);
}

ZVec zsub(const ZVec& a, const ZVec& b, const Integer& m) {
  ZVec c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return zreduce(std::move(c), m);
}

// Division by a monic polynomial.
void zdivmod(const ZVec& a, const ZVec& b, ZVec& q, ZVec& r, const Integer& m) {
  r = a;
  ztrim(r);
  q.clear();
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 >= db) q.assign(r.size() - db, Integer(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Integer f = r[i] % m;
    if (sign(f) < 0) f += m;
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  q = zreduce(std::move(q), m);
  r = zreduce(std::move(r), m);
}

// Bezout cofactors mod p for coprime monic g, h: s g + t h = 1.
void bezout_mod_p(const PVec& g, const PVec& h, long p, PVec& s, PVec& t) {
  PVec r0 = g, r1 = h;
  PVec s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PVec q, r2;
    pdivmod(r0, r1, q, r2, p);
    PVec s2 = s0, t2 = t0;
    PVec qs = pmul(q, s1, p), qt = pmul(q, t1, p);
    // s2 = s0 - q s1, t2 = t0 - q t1
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
    ptrim(s2);
    t2.resize(std::max(t2.size(), qt.size()), 0);
    for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
    ptrim(t2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("modular factors not coprime");
  long inv = pinv(r0[0], p);
  for (auto& x : s0) x = x * inv % p;
  for (auto& x : t0) x = x * inv % p;
  s = std::move(s0);
  t = std::move(t0);
}

// Quadratic Hensel lifting of f = g h from mod p up to mod target (a power
// of p). All polynomials monic.
void hensel_pair(const ZVec& f, ZVec& g, ZVec& h, long p, const Integer& target) {
  PVec gp(g.size()), hp(h.size());
  for (std::size_t i = 0; i < g.size(); ++i) gp[i] = mpz_fdiv_ui(g[i].get_mpz_t(), p);
  for (std::size_t i = 0; i < h.size(); ++i) hp[i] = mpz_fdiv_ui(h[i].get_mpz_t(), p);
  PVec sp, tp;
  bezout_mod_p(gp, hp, p, sp, tp);
  ZVec s(sp.size()), t(tp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) s[i] = sp[i];
  for (std::size_t i = 0; i < tp.size(); ++i) t[i] = tp[i];
  Integer m = p;
  while (m < target) {
    Integer m2 = m * m;
    ZVec e = zsub(f, zmul(g, h, m2), m2);
    ZVec q, r;
    zdivmod(zmul(s, e, m2), h, q, r, m2);
    ZVec g1 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
    ZVec h1 = zadd(h, r, m2);
    ZVec b = zsub(zadd(zmul(s, g1, m2), zmul(t, h1, m2), m2), ZVec{Integer(1)}, m2);
    ZVec c, d;
    zdivmod(zmul(s, b, m2), h1, c, d, m2);
    ZVec s1 = zsub(s, d, m2);
    ZVec t1 = zsub(t, zadd(zmul(t, b, m2), zmul(c, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = m2;
  }
}

// Lift a full modular factorization of a monic f to mod target.
std::vector<ZVec> hensel_multi(const ZVec& f, const std::vector<PVec>& fac, long p,
                               const Integer& target) {
  if (fac.size() == 1) {
    ZVec r = f;
    return {zreduce(std::move(r), target)};
  }
  std::size_t half = fac.size() / 2;
  PVec gp{1}, hp{1};
  for (std::size_t i = 0; i < half; ++i) gp = pmul(gp, fac[i], p);
  for (std::size_t i = half; i < fac.size(); ++i) hp = pmul(hp, fac[i], p);
  ZVec g(gp.size()), h(hp.size());
  for (std::size_t i = 0; i < gp.size(); ++i) g[i] = gp[i];
  for (std::size_t i = 0; i < hp.size(); ++i) h[i] = hp[i];
  hensel_pair(zreduce(ZVec(f), target), g, h, p, target);
  std::vector<PVec> left(fac.begin(), fac.begin() + half);
  std::vector<PVec> right(fac.begin() + half, fac.end());
  std::vector<ZVec> out = hensel_multi(g, left, p, target);
  std::vector<ZVec> rhs = hensel_multi(h, right, p, target);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

// ---------------------------------------------------------------------------
// Z[x] helpers for the recombination stage.
// ---------------------------------------------------------------------------

ZVec zcenter(ZVec a, const Integer& m) {
  Integer half = m / 2;
  for (auto& x : a) {
    x %= m;
    if (sign(x) < 0) x += m;
    if (x > half) x -= m;
  }
  ztrim(a);
  return a;
}

// Exact division test of monic integer polynomials.
bool zdivides(const ZVec& f, const ZVec& g, ZVec& quotient) {
  if (g.size() > f.size()) return false;
  ZVec r = f;
  const int dg = static_cast<int>(g.size()) - 1;
  ZVec q(f.size() - g.size() + 1, Integer(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
    if (r[i] == 0) continue;
    q[i - dg] = r[i];
    Integer lead = r[i];
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= lead * g[j];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  quotient = std::move(q);
  ztrim(quotient);
  return true;
}

// Factor a monic squarefree integer polynomial (degree >= 1) into monic
// irreducible integer factors via Zassenhaus.
std::vector<ZVec> factor_monic_squarefree_z(const ZVec& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {f};

  static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  long best_p = 0;
  std::vector<PVec> best_fac;
  int tried = 0;
  for (long p : kPrimes) {
    PVec fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fp[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    ptrim(fp);
    if (static_cast<int>(fp.size()) - 1 != n) continue;  // cannot happen, f monic
    if (pgcd(fp, pderiv(fp, p), p).size() != 1) continue;
    std::vector<PVec> fac = berlekamp(pmonic(fp, p), p);
    if (best_fac.empty() || fac.size() < best_fac.size()) {
      best_p = p;
      best_fac = std::move(fac);
    }
    if (best_fac.size() == 1 || ++tried >= 4) break;
  }
  if (best_p == 0) throw std::logic_error("no usable prime for factorization");
  if (best_fac.size() == 1) return {f};

  // Mignotte-style bound on factor coefficients, then lift past 2*bound.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= (n + 1);
  Integer target = best_p;
  while (target <= 2 * bound) target *= target;
  std::vector<ZVec> lifted = hensel_multi(zreduce(ZVec(f), target), best_fac, best_p, target);

  // Subset recombination.
  std::vector<ZVec> result;
  ZVec rem = f;
  std::vector<ZVec> pool = std::move(lifted);
  bool progress = true;
  while (progress && !pool.empty()) {
    progress = false;
    const int deg_rem = static_cast<int>(rem.size()) - 1;
    for (std::size_t sz = 1; sz <= pool.size() && !progress; ++sz) {
      if (sz == pool.size()) {
        result.push_back(rem);
        pool.clear();
        progress = true;
        break;
      }
      std::vector<std::size_t> idx(sz);
      for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
      while (true) {
        int deg_sum = 0;
        for (std::size_t i : idx) deg_sum += static_cast<int>(pool[i].size()) - 1;
        if (2 * deg_sum <= deg_rem) {
          ZVec cand{Integer(1)};
          for (std::size_t i : idx) cand = zmul(cand, pool[i], target);
          cand = zcenter(std::move(cand), target);
          ZVec quot;
          if (!cand.empty() && cand.back() == 1 && zdivides(rem, cand, quot)) {
            result.push_back(cand);
            rem = std::move(quot);
            std::vector<ZVec> np;
            for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
              if (k < idx.size() && idx[k] == i) {
                ++k;
                continue;
              }
              np.push_back(pool[i]);
            }
            pool = std::move(np);
            progress = true;
            break;
          }
        }
        // next combination
        int pos = static_cast<int>(sz) - 1;
        while (pos >= 0 && idx[pos] == pool.size() - sz + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  // Anything left over is a single irreducible cofactor.
  int deg_sum = 0;
  for (const auto& g : result) deg_sum += static_cast<int>(g.size()) - 1;
  if (deg_sum < n) result.push_back(rem);
  return result;
}

}  // namespace

UniFactorization factor_unipoly(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor zero");
  UniFactorization out;
  out.unit = f.leading_coeff();
  if (f.degree() == 0) return out;
  UniPoly g = f.monic();

  // Yun squarefree decomposition.
  std::vector<std::pair<UniPoly, int>> squarefree;
  {
    UniPoly d = g.derivative();
    UniPoly u = UniPoly::gcd(g, d);
    UniPoly v = g.divided_exact(u);
    UniPoly w = d.divided_exact(u);
    int i = 1;
    while (v.degree() > 0) {
      UniPoly z = w - v.derivative();
      UniPoly h = UniPoly::gcd(v, z);
      if (h.degree() > 0) squarefree.emplace_back(h, i);
      v = v.divided_exact(h);
      w = z.divided_exact(h);
      ++i;
    }
  }

  for (const auto& [part, mult] : squarefree) {
    // Clear denominators, then force a monic integer polynomial by the
    // substitution x -> x / lc (scaling the roots by lc).
    Integer den = 1;
    for (const auto& c : part.coeffs())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> z(part.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] = part.coeff(static_cast<int>(i)).get_num() *
             (den / part.coeff(static_cast<int>(i)).get_den());
    Integer cont = 0;
    for (const auto& x : z) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
    if (sign(z.back()) < 0) cont = -cont;
    for (auto& x : z) x /= cont;
    const int n = static_cast<int>(z.size()) - 1;
    Integer lc = z.back();
    std::vector<Integer> monic(z.size());
    // monic[i] = z[i] * lc^{n-1-i}
    Integer pw = 1;
    for (int i = n; i >= 0; --i) {
      monic[i] = z[i] * pw;
      if (i > 0) pw *= lc;
    }
    for (const auto& mz : factor_monic_squarefree_z(monic)) {
      // Map back: factor of z is monic_factor(lc * x), made monic over Q.
      const int dm = static_cast<int>(mz.size()) - 1;
      std::vector<Rational> c(mz.size());
      Integer lp = 1;
      for (int i = 0; i <= dm; ++i) {
        c[i] = Rational(mz[i] * lp);
        lp *= lc;
      }
      UniPoly fac = UniPoly(std::move(c)).monic();
      out.factors.emplace_back(std::move(fac), mult);
    }
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              const auto& ca = a.first.coeffs();
              const auto& cb = b.first.coeffs();
              for (std::size_t i = 0; i < ca.size(); ++i) {
                if (ca[i] != cb[i]) return ca[i] < cb[i];
              }
              return a.second < b.second;
            });
  return out;
}

std::vector<std::pair<BinaryForm, int>> factor_form(const BinaryForm& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor zero form");
  std::vector<std::pair<BinaryForm, int>> out;
  int so = f.s_order();
  if (so > 0) out.emplace_back(BinaryForm(1, {Rational(1), Rational(0)}), so);
  UniPoly u = f.dehomogenized();
  if (u.degree() > 0) {
    for (const auto& [g, m] : factor_unipoly(u).factors)
      out.emplace_back(BinaryForm::from_unipoly(g, g.degree()).normalized(), m);
  }
  return out;
}

}  // namespace cuspidal
