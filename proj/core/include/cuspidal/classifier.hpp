#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cuspidal/multseq.hpp"

namespace cuspidal {

/// Numerical data of a candidate curve of degree d whose maximal cusp has
/// multiplicity d-3. The distinguished cusp (multiplicity d-3) comes first;
/// the remaining cusps are sorted descending by (first entry, length).
struct CandidateData {
  int degree = 0;
  std::vector<MultiplicitySequence> cusps;
  bool operator==(const CandidateData&) const = default;
};

enum class Verdict { Survivor, Eliminated };

struct ScreenReport {
  bool bezout_ok = false;
  bool genus_ok = false;
  bool hurwitz_ok = false;
  long chi = 0;
  Verdict verdict = Verdict::Eliminated;
  std::vector<std::string> reasons;
};

/// Numerical elimination tests:
///  - bezout_ok: m^(0)+m^(1) <= d for each cusp and m^(0)+m'^(0) <= d for
///    each pair of cusps (line sections);
///  - genus_ok: sum of deltas equals (d-1)(d-2)/2;
///  - hurwitz_ok: for every cusp Z, the ramification of the projection from
///    Z satisfies (m_Z^(1)-1) + sum_{P != Z}(m_P^(0)-1) <= 2(d-m_Z^(0))-2;
///  - chi = -3(d-3) + sum of chi_P.
/// Survivor iff all three hold and chi <= 0. Throws on malformed data.
ScreenReport screen(const CandidateData& c);

/// All candidates at degree d (>= 6): distinguished cusp (d-3) or
/// (d-3,2_a) with star_condition(d,a); other cusps among (2_a), (3_a),
/// (3_a,2); at least 3 cusps; branch-count, line-section, genus, and
/// distinguished-projection ramification constraints enforced.
/// Deterministic order, deduplicated up to reordering.
std::vector<CandidateData> enumerate_candidates(int d);

/// enumerate + screen over a degree range.
std::vector<std::pair<CandidateData, ScreenReport>> classify(int dmin, int dmax);

/// Published degree/multiplicity bounds for cuspidal rational curves:
/// 3m > d, and d < alpha*m + beta with alpha = (3+sqrt5)/2,
/// beta = alpha - 1/sqrt5, decided exactly in Q(sqrt5).
struct BoundsVerdict {
  bool matsuoka_sakai = false;
  bool orevkov = false;
};
BoundsVerdict bounds_check(int d, int m);

}  // namespace cuspidal
