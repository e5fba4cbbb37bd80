#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cuspidal/classifier.hpp"

using namespace cuspidal;

namespace {
CandidateData theorem_data(int k) {
  MultiplicitySequence big{2 * k};
  big.insert(big.end(), k, 2);
  return CandidateData{2 * k + 3, {big, MultiplicitySequence(k, 3), {2}}};
}
}  // namespace

TEST_CASE("screen accepts the degree-9 theorem data") {
  ScreenReport r = screen(CandidateData{9, {{6, 2, 2, 2}, {3, 3, 3}, {2}}});
  CHECK(r.bezout_ok);
  CHECK(r.genus_ok);
  CHECK(r.hurwitz_ok);
  CHECK(r.chi == 0);
  CHECK(r.verdict == Verdict::Survivor);
}

TEST_CASE("degree-6 data dies only through the generalized ramification count") {
  ScreenReport r = screen(CandidateData{6, {{3}, {3, 3}, {2}}});
  CHECK(r.bezout_ok);
  CHECK(r.genus_ok);      // 3 + 6 + 1 = 10 = 5*4/2
  CHECK(r.chi == 0);
  CHECK_FALSE(r.hurwitz_ok);  // projecting from the (3,3) cusp: 2+2+1 = 5 > 4
  CHECK(r.verdict == Verdict::Eliminated);
  REQUIRE(r.reasons.size() == 1);
  CHECK(r.reasons[0] == "Hurwitz bound violated projecting from cusp 1");
}

TEST_CASE("degree-7 data with a delta deficit is eliminated") {
  // Sum of deltas is 6 + 2 + 5 = 13, short of (7-1)(7-2)/2 = 15.
  ScreenReport r = screen(CandidateData{7, {{4}, {2, 2}, {2, 2, 2, 2, 2}}});
  CHECK_FALSE(r.genus_ok);
  CHECK(r.verdict == Verdict::Eliminated);
}

TEST_CASE("enumerate finds the documented candidates") {
  auto has = [](const std::vector<CandidateData>& list, const CandidateData& c) {
    return std::find(list.begin(), list.end(), c) != list.end();
  };
  CHECK(has(enumerate_candidates(9), theorem_data(3)));
  CHECK(has(enumerate_candidates(7), theorem_data(2)));
  CHECK(has(enumerate_candidates(6), CandidateData{6, {{3}, {3, 3}, {2}}}));
  CHECK_THROWS(enumerate_candidates(5));
}

TEST_CASE("enumerate is deterministic") {
  CHECK(enumerate_candidates(12) == enumerate_candidates(12));
}

TEST_CASE("every enumerated sequence is valid") {
  for (int d = 6; d <= 20; ++d)
    for (const CandidateData& c : enumerate_candidates(d))
      for (const MultiplicitySequence& s : c.cusps) CHECK(validate(s));
}

TEST_CASE("classification over degrees 6..31") {
  auto results = classify(6, 31);
  std::vector<CandidateData> survivors;
  for (const auto& [cand, rep] : results) {
    if (rep.verdict == Verdict::Survivor) {
      survivors.push_back(cand);
      CHECK(rep.chi == 0);
    } else {
      CHECK_FALSE(rep.reasons.empty());
    }
  }
  REQUIRE(survivors.size() == 13);
  for (int k = 2; k <= 14; ++k)
    CHECK(std::find(survivors.begin(), survivors.end(), theorem_data(k)) !=
          survivors.end());
}

TEST_CASE("small windows of the classification") {
  auto survivors_of = [](int lo, int hi) {
    std::vector<CandidateData> out;
    for (const auto& [cand, rep] : classify(lo, hi))
      if (rep.verdict == Verdict::Survivor) out.push_back(cand);
    return out;
  };
  CHECK(survivors_of(6, 6).empty());
  auto s69 = survivors_of(6, 9);
  REQUIRE(s69.size() == 2);
  CHECK(s69[0] == theorem_data(2));
  CHECK(s69[1] == theorem_data(3));
  CHECK_THROWS(classify(9, 6));
}

TEST_CASE("published degree bounds") {
  BoundsVerdict v = bounds_check(9, 6);
  CHECK(v.matsuoka_sakai);
  CHECK(v.orevkov);
  CHECK_FALSE(bounds_check(6, 2).matsuoka_sakai);
  for (int k = 2; k <= 10; ++k) {
    BoundsVerdict b = bounds_check(2 * k + 3, 2 * k);
    CHECK(b.matsuoka_sakai);
    CHECK(b.orevkov);
  }
}
