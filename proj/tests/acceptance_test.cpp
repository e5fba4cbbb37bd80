// End-to-end acceptance run: one pass/fail line per criterion.
#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>

#include "cuspidal/classifier.hpp"
#include "cuspidal/constructor.hpp"
#include "cuspidal/cremona.hpp"
#include "cuspidal/curve.hpp"

using namespace cuspidal;

namespace {

int failures = 0;

void report(const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " - " << name << std::endl;
  if (!ok) ++failures;
}

CandidateData theorem_data(int k) {
  MultiplicitySequence big{2 * k};
  big.insert(big.end(), k, 2);
  return CandidateData{2 * k + 3, {big, MultiplicitySequence(k, 3), {2}}};
}

BranchGerm monomial_germ(int a, int b) {
  return BranchGerm(RationalFunction(UniPoly::monomial(a)),
                    RationalFunction(UniPoly::monomial(b)));
}

bool criterion_classification() {
  auto results = classify(6, 31);
  std::vector<CandidateData> survivors;
  for (const auto& [cand, rep] : results) {
    if (rep.verdict == Verdict::Survivor) {
      if (rep.chi != 0) return false;
      survivors.push_back(cand);
    } else if (rep.reasons.empty()) {
      return false;
    }
  }
  if (survivors.size() != 13) return false;
  for (int k = 2; k <= 14; ++k)
    if (std::find(survivors.begin(), survivors.end(), theorem_data(k)) ==
        survivors.end())
      return false;
  return true;
}

bool criterion_degree6_case() {
  ScreenReport r = screen(CandidateData{6, {{3}, {3, 3}, {2}}});
  return r.bezout_ok && r.genus_ok && r.chi == 0 && !r.hurwitz_ok &&
         r.verdict == Verdict::Eliminated && r.reasons.size() == 1 &&
         r.reasons[0].find("Hurwitz") != std::string::npos &&
         r.reasons[0].find("cusp 1") != std::string::npos;
}

bool criterion_constructor_oracle() {
  FGSolution s = solve_fg(2);
  UniPoly h(std::vector<Rational>{Rational(-4), Rational(3)});
  return s.h == h &&
         q_polynomial(2) == BinaryForm(2, {Rational(1), Rational(2), Rational(3)});
}

bool criterion_existence() {
  for (int k = 1; k <= 8; ++k) {
    MultiplicitySequence big{2 * k};
    big.insert(big.end(), k, 2);
    CurveReport r = verify_curve(make_curve(k).parameterization,
                                 {{P1Point::infinity(), big},
                                  {P1Point::affine(0), MultiplicitySequence(k, 3)},
                                  {P1Point::affine(1), {2}}});
    if (r.degree != 2 * k + 3 || !r.genus_saturated || !r.injective || !r.passes)
      return false;
    BinaryForm s = BinaryForm::monomial(1, 0), t = BinaryForm::monomial(1, 1);
    BinaryForm smt(1, {Rational(1), Rational(-1)});
    for (const BinaryForm& f : r.singular_support)
      if (!(f == s || f == t || f == smt)) return false;
  }
  return true;
}

bool criterion_uniqueness() {
  MarkedCurve mc = cubic_seed();
  for (int k = 1; k <= 5; ++k) {
    mc = forward_step(mc);
    CurveParameterization a = canonical_form(mc.curve);
    CurveParameterization b = canonical_form(make_curve(k).parameterization);
    if (!(a.x == b.x && a.y == b.y && a.z == b.z)) return false;
  }
  return true;
}

bool criterion_rectifiability() {
  MarkedCurve mc = forward_step(forward_step(forward_step(cubic_seed())));
  std::vector<QuadraticMap> chain = rectify(mc);
  if (chain.size() != 5) return false;
  CurveParameterization image = mc.curve;
  for (const QuadraticMap& m : chain) image = apply(m, image);
  return image.degree == 1;
}

bool criterion_properties() {
  // (i) arithmetic shortcut vs sequence validity (a >= 1: the bare (d-3)
  // sequence is always valid, so only a >= 1 is informative)
  for (int d = 6; d <= 60; ++d)
    for (int a = 1; a <= 2 * d; ++a) {
      MultiplicitySequence s{d - 3};
      s.insert(s.end(), a, 2);
      if (star_condition(d, a) != validate(s)) return false;
    }
  // (ii) prefix-sum intersection law and (v) delta formula on monomial cusps
  const std::pair<int, int> dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, -2}};
  for (int a = 2; a < 9; ++a)
    for (int b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      MultiplicitySequence seq = mult_sequence(monomial_germ(a, b));
      if (delta_of(seq) != (a - 1) * (b - 1) / 2) return false;
      MultiplicitySequence ext = seq;
      ext.push_back(1);
      for (auto [ds, dt] : dirs) {
        BranchGerm line(RationalFunction(UniPoly::monomial(1, ds)),
                        RationalFunction(UniPoly::monomial(1, dt)));
        long got = germ_intersection(monomial_germ(a, b), line);
        bool legal = false;
        long sum = 0;
        for (std::size_t i = 0; i < ext.size(); ++i) {
          sum += ext[i];
          if (i > 0 && ext[i - 1] != ext[0]) break;
          if (sum == got) legal = true;
        }
        if (!legal) return false;
      }
    }
  // (iii) closed forms of the five families
  for (int d = 7; d <= 40; ++d) {
    LocalInvariants q = local_invariants({d - 3});
    if (q.chi != 2 * d - 9) return false;
    for (int a = 1; a <= 2 * d; ++a) {
      if (!star_condition(d, a)) continue;
      MultiplicitySequence s{d - 3};
      s.insert(s.end(), a, 2);
      if (local_invariants(s).chi != d - 5 + a + (d - 2) / 2) return false;
    }
  }
  for (int a = 1; a <= 40; ++a) {
    if (local_invariants(MultiplicitySequence(a, 2)).chi != a) return false;
    if (local_invariants(MultiplicitySequence(a, 3)).chi != 2 * a + 1) return false;
    MultiplicitySequence s(a, 3);
    s.push_back(2);
    if (local_invariants(s).chi != 2 * a + 2) return false;
  }
  // (iv) independence rank
  for (int k = 3; k <= 8; ++k) {
    IndependenceResult r = independence_check(k);
    if (r.dimension != 5 * k - 8 || !r.ok) return false;
  }
  return true;
}

bool criterion_bounds() {
  for (int k = 2; k <= 14; ++k) {
    BoundsVerdict v = bounds_check(2 * k + 3, 2 * k);
    if (!v.matsuoka_sakai || !v.orevkov) return false;
  }
  return true;
}

bool guarded(const std::function<bool()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    std::cout << "  (exception: " << e.what() << ")\n";
    return false;
  }
}

}  // namespace

int main() {
  report("1 classification: degrees 6..31 leave exactly the 13 expected survivors",
         guarded(criterion_classification));
  report("2 degree-6 case dies only by the generalized ramification count",
         guarded(criterion_degree6_case));
  report("3 constructor oracle at k=2: h = 3t-4, q = s^2+2st+3t^2",
         guarded(criterion_constructor_oracle));
  report("4 existence: full verification of the curves for k=1..8",
         guarded(criterion_existence));
  report("5 uniqueness: both construction paths agree canonically for k=1..5",
         guarded(criterion_uniqueness));
  report("6 rectifiability: level 3 reaches a line through 5 quadratic maps",
         guarded(criterion_rectifiability));
  report("7 property suites: validity shortcut, intersection law, closed forms, "
         "independence rank, delta formula",
         guarded(criterion_properties));
  report("8 bounds: every survivor satisfies both published degree bounds",
         guarded(criterion_bounds));
  return failures == 0 ? 0 : 1;
}
