#include "cuspidal/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuspidal/surd5.hpp"

namespace cuspidal {

namespace {

long genus_target(int d) { return static_cast<long>(d - 1) * (d - 2) / 2; }

int first_mult(const MultiplicitySequence& s) { return s.front(); }
int second_mult(const MultiplicitySequence& s) { return s.size() > 1 ? s[1] : 1; }

void check_candidate(const CandidateData& c) {
  if (c.degree < 6) throw std::invalid_argument("degree below 6");
  if (c.cusps.size() < 3) throw std::invalid_argument("fewer than 3 cusps");
  for (const auto& s : c.cusps)
    if (!validate(s)) throw std::invalid_argument("invalid cusp sequence");
  if (first_mult(c.cusps.front()) != c.degree - 3)
    throw std::invalid_argument("no distinguished cusp of multiplicity d-3");
  for (std::size_t i = 1; i < c.cusps.size(); ++i)
    if (first_mult(c.cusps[i]) > 3)
      throw std::invalid_argument("secondary cusp multiplicity above 3");
}

// Projection from cusp Z: local ramification m_Z^(1)-1 at the center, at
// least m_P^(0)-1 under every other cusp; must fit in 2(deg proj)-2.
bool hurwitz_from(const CandidateData& c, std::size_t z) {
  long lhs = second_mult(c.cusps[z]) - 1;
  for (std::size_t i = 0; i < c.cusps.size(); ++i)
    if (i != z) lhs += first_mult(c.cusps[i]) - 1;
  long rhs = 2L * (c.degree - first_mult(c.cusps[z])) - 2;
  return lhs <= rhs;
}

bool bezout_ok(const CandidateData& c) {
  const int d = c.degree;
  for (const auto& s : c.cusps)
    if (first_mult(s) + second_mult(s) > d) return false;
  for (std::size_t i = 0; i < c.cusps.size(); ++i)
    for (std::size_t j = i + 1; j < c.cusps.size(); ++j)
      if (first_mult(c.cusps[i]) + first_mult(c.cusps[j]) > d) return false;
  return true;
}

long total_delta(const CandidateData& c) {
  long s = 0;
  for (const auto& q : c.cusps) s += delta_of(q);
  return s;
}

long total_chi(const CandidateData& c) {
  long s = -3L * (c.degree - 3);
  for (const auto& q : c.cusps) s += local_invariants(q).chi;
  return s;
}

MultiplicitySequence rep(int value, int count) {
  return MultiplicitySequence(count, value);
}

// Non-increasing positive exponent tuples of fixed length with a given
// weighted delta sum, appended to out via the continuation.
template <typename F>
void exponent_tuples(int count, long target, long unit_delta, long extra_per,
                     int max_first, std::vector<int>& acc, const F& emit) {
  if (count == 0) {
    if (target == 0) emit(acc);
    return;
  }
  // Each chosen cusp consumes unit_delta*a + extra_per of the delta budget.
  for (int a = 1; a <= max_first; ++a) {
    long cost = unit_delta * a + extra_per;
    if (cost > target) break;
    if (cost + (count - 1) * (unit_delta + extra_per) > target) continue;
    acc.push_back(a);
    exponent_tuples(count - 1, target - cost, unit_delta, extra_per, a, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

ScreenReport screen(const CandidateData& c) {
  check_candidate(c);
  ScreenReport r;
  r.bezout_ok = bezout_ok(c);
  r.genus_ok = total_delta(c) == genus_target(c.degree);
  r.hurwitz_ok = true;
  for (std::size_t z = 0; z < c.cusps.size(); ++z) {
    if (!hurwitz_from(c, z)) {
      r.hurwitz_ok = false;
      r.reasons.push_back("Hurwitz bound violated projecting from cusp " +
                          std::to_string(z));
    }
  }
  r.chi = total_chi(c);
  if (!r.bezout_ok) r.reasons.insert(r.reasons.begin(), "line section exceeds degree");
  if (!r.genus_ok) r.reasons.push_back("delta sum misses the genus target");
  if (r.chi > 0) r.reasons.push_back("chi positive");
  r.verdict = (r.bezout_ok && r.genus_ok && r.hurwitz_ok && r.chi <= 0)
                  ? Verdict::Survivor
                  : Verdict::Eliminated;
  return r;
}

std::vector<CandidateData> enumerate_candidates(int d) {
  if (d < 6) throw std::invalid_argument("degree below 6");
  const long target = genus_target(d);
  std::vector<CandidateData> out;

  std::vector<std::pair<MultiplicitySequence, long>> q_choices;
  {
    MultiplicitySequence q0{d - 3};
    q_choices.emplace_back(q0, delta_of(q0));
    for (int a = 1;; ++a) {
      MultiplicitySequence q{d - 3};
      q.insert(q.end(), a, 2);
      long del = delta_of(q);
      if (del > target) break;
      if (star_condition(d, a)) q_choices.emplace_back(std::move(q), del);
    }
  }

  for (const auto& [qseq, qdelta] : q_choices) {
    long rest = target - qdelta;
    // Branch shapes at the other cusps: n2 of type (2_a), n3 of (3_a),
    // n32 of (3_a,2); the projection from the distinguished cusp allows
    // total extra ramification at most 4, counting 1, 2, 2 respectively.
    for (int n2 = 0; n2 <= 4; ++n2)
      for (int n3 = 0; n3 * 2 + n2 <= 4; ++n3)
        for (int n32 = 0; (n3 + n32) * 2 + n2 <= 4; ++n32) {
          if (n2 + n3 + n32 < 2) continue;
          // Split the remaining delta budget among the three shape classes.
          for (long d2 = 0; d2 <= rest; ++d2) {
            if (n2 == 0 && d2 != 0) break;
            if (n2 > 0 && d2 < n2) continue;
            for (long d3 = 0; d2 + d3 <= rest; ++d3) {
              if (n3 == 0 && d3 != 0) break;
              if (n3 > 0 && d3 < 3 * n3) continue;
              long d32 = rest - d2 - d3;
              if (n32 == 0 && d32 != 0) continue;
              if (n32 > 0 && d32 < 3 * n32 + n32) continue;
              std::vector<std::vector<int>> t2s, t3s, t32s;
              std::vector<int> acc;
              exponent_tuples(n2, d2, 1, 0, static_cast<int>(d2), acc,
                              [&](const std::vector<int>& v) { t2s.push_back(v); });
              acc.clear();
              exponent_tuples(n3, d3, 3, 0, static_cast<int>(d3 / 3 + 1), acc,
                              [&](const std::vector<int>& v) { t3s.push_back(v); });
              acc.clear();
              exponent_tuples(n32, d32, 3, 1, static_cast<int>(d32 / 3 + 1), acc,
                              [&](const std::vector<int>& v) { t32s.push_back(v); });
              if (n2 == 0) t2s = {{}};
              if (n3 == 0) t3s = {{}};
              if (n32 == 0) t32s = {{}};
              for (const auto& a2 : t2s)
                for (const auto& a3 : t3s)
                  for (const auto& a32 : t32s) {
                    CandidateData c;
                    c.degree = d;
                    c.cusps.push_back(qseq);
                    std::vector<MultiplicitySequence> rest_cusps;
                    for (int a : a2) rest_cusps.push_back(rep(2, a));
                    for (int a : a3) rest_cusps.push_back(rep(3, a));
                    for (int a : a32) {
                      MultiplicitySequence s = rep(3, a);
                      s.push_back(2);
                      rest_cusps.push_back(std::move(s));
                    }
                    std::sort(rest_cusps.begin(), rest_cusps.end(),
                              [](const MultiplicitySequence& x,
                                 const MultiplicitySequence& y) {
                                if (x.front() != y.front()) return x.front() > y.front();
                                if (x.size() != y.size()) return x.size() > y.size();
                                return x > y;
                              });
                    for (auto& s : rest_cusps) c.cusps.push_back(std::move(s));
                    if (!bezout_ok(c)) continue;
                    if (total_delta(c) != target) continue;
                    if (!hurwitz_from(c, 0)) continue;
                    out.push_back(std::move(c));
                  }
            }
          }
        }
  }
  std::sort(out.begin(), out.end(), [](const CandidateData& a, const CandidateData& b) {
    return a.cusps < b.cusps;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<CandidateData, ScreenReport>> classify(int dmin, int dmax) {
  if (dmin < 6 || dmin > dmax) throw std::invalid_argument("invalid degree range");
  std::vector<std::pair<CandidateData, ScreenReport>> out;
  for (int d = dmin; d <= dmax; ++d)
    for (auto& c : enumerate_candidates(d)) {
      ScreenReport r = screen(c);
      out.emplace_back(std::move(c), std::move(r));
    }
  return out;
}

BoundsVerdict bounds_check(int d, int m) {
  if (d < 1 || m < 1 || m > d) throw std::invalid_argument("invalid (d, m)");
  BoundsVerdict v;
  v.matsuoka_sakai = 3 * m > d;
  // alpha*m + beta - d with alpha = (3+sqrt5)/2, beta = alpha - sqrt5/5.
  Surd5 alpha(Rational(3, 2), Rational(1, 2));
  Surd5 beta = alpha - Surd5(0, Rational(1, 5));
  Surd5 value = alpha * Surd5(m, 0) + beta - Surd5(d, 0);
  v.orevkov = surd_sign(value) > 0;
  return v;
}

}  // namespace cuspidal
