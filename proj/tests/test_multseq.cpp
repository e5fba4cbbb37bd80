#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuspidal/multseq.hpp"

using namespace cuspidal;

namespace {
MultiplicitySequence seq_with_twos(int head, int a) {
  MultiplicitySequence s{head};
  s.insert(s.end(), a, 2);
  return s;
}
}  // namespace

TEST_CASE("validate against the blow-up characteristic property") {
  CHECK(validate({2}));
  CHECK(validate({3, 2}));
  CHECK_FALSE(validate({5, 3}));
  CHECK(validate({5, 3, 2}));
  CHECK_FALSE(validate({6, 2, 2}));
  CHECK(validate({6, 2, 2, 2}));
  CHECK_THROWS_WITH(validate({2, 3}), doctest::Contains("not a candidate sequence"));
  CHECK_THROWS_WITH(validate({3, 1}), doctest::Contains("not a candidate sequence"));
}

TEST_CASE("local invariants of the standard cusp types") {
  CHECK(local_invariants({6}) == LocalInvariants{5, 5, 9, 15});
  CHECK(local_invariants({2, 2, 2}) == LocalInvariants{3, 1, 3, 3});
  CHECK(local_invariants({3, 3}) == LocalInvariants{4, 2, 5, 6});
  CHECK(local_invariants({6, 2, 2, 2}) == LocalInvariants{8, 3, 10, 18});
}

TEST_CASE("star condition") {
  CHECK(star_condition(9, 3));
  CHECK_FALSE(star_condition(9, 2));
  CHECK(star_condition(8, 2));
}

TEST_CASE("star condition matches sequence validity for (d-3, 2_a)") {
  // a >= 1: the bare sequence (d-3) is always valid (it continues with 1s),
  // so the arithmetic shortcut only mirrors validity once a 2 is present.
  for (int d = 6; d <= 60; ++d)
    for (int a = 1; a <= 2 * d; ++a) {
      bool valid = validate(seq_with_twos(d - 3, a));
      CHECK_MESSAGE(star_condition(d, a) == valid, "d=", d, " a=", a);
    }
}

TEST_CASE("closed forms of the five candidate families") {
  for (int d = 7; d <= 40; ++d) {
    // (d-3): eta = omega = d-4, chi = 2d-9
    LocalInvariants q = local_invariants({d - 3});
    CHECK(q.eta == d - 4);
    CHECK(q.omega == d - 4);
    CHECK(q.chi == 2 * d - 9);
    // (d-3, 2_a) for legal a: chi = d-5 + a + ceil((d-3)/2)
    for (int a = 1; a <= 2 * d; ++a) {
      if (!star_condition(d, a)) continue;
      LocalInvariants s = local_invariants(seq_with_twos(d - 3, a));
      CHECK(s.chi == d - 5 + a + (d - 2) / 2);
    }
  }
  for (int a = 1; a <= 40; ++a) {
    // (2_a): chi = a
    CHECK(local_invariants(MultiplicitySequence(a, 2)).chi == a);
    // (3_a): chi = 2a + 1
    CHECK(local_invariants(MultiplicitySequence(a, 3)).chi == 2 * a + 1);
    // (3_a, 2): chi = 2a + 2
    MultiplicitySequence s(a, 3);
    s.push_back(2);
    CHECK(local_invariants(s).chi == 2 * a + 2);
  }
}

TEST_CASE("chi is positive for every valid sequence") {
  for (int head = 2; head <= 9; ++head)
    for (int a = 0; a <= 6; ++a) {
      MultiplicitySequence s = seq_with_twos(head, a);
      bool valid = false;
      try {
        valid = validate(s);
      } catch (...) {
        continue;
      }
      if (valid) CHECK(local_invariants(s).chi >= 1);
    }
}

TEST_CASE("genus saturation identity for the theorem triples") {
  for (int k = 1; k <= 50; ++k) {
    long total = delta_of(seq_with_twos(2 * k, k)) +
                 delta_of(MultiplicitySequence(k, 3)) + delta_of({2});
    CHECK(total == 2L * k * k + 3 * k + 1);
    long d = 2 * k + 3;
    CHECK(total == (d - 1) * (d - 2) / 2);
  }
}
