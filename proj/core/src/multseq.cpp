#include "cuspidal/multseq.hpp"

#include <stdexcept>

namespace cuspidal {

namespace {

void check_shape(const MultiplicitySequence& seq) {
  if (seq.empty()) throw std::invalid_argument("not a candidate sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 2) throw std::invalid_argument("not a candidate sequence");
    if (i > 0 && seq[i] > seq[i - 1])
      throw std::invalid_argument("not a candidate sequence");
  }
}

}  // namespace

bool validate(const MultiplicitySequence& seq) {
  check_shape(seq);
  const int n = static_cast<int>(seq.size()) - 1;
  // Extended sequence with the terminating 1; entries past the end are 1s
  // that would be appended, so only the stored entries need checking.
  std::vector<int> m(seq);
  m.push_back(1);
  for (int i = 0; i < n; ++i) {
    if (m[i] == m[i + 1]) continue;
    // m[i] must be a run m[i+1] = ... = m[i+k] plus the following entry.
    bool ok = false;
    long sum = 0;
    for (int k = 1; i + k + 1 <= n + 1; ++k) {
      if (m[i + k] != m[i + 1]) break;
      sum += m[i + k];
      long total = sum + m[i + k + 1];
      if (total == m[i]) {
        ok = true;
        break;
      }
      if (total > m[i]) break;
    }
    if (!ok) return false;
  }
  return true;
}

LocalInvariants local_invariants(const MultiplicitySequence& seq) {
  if (!validate(seq)) throw std::invalid_argument("invalid multiplicity sequence");
  std::vector<int> m(seq);
  m.push_back(1);
  LocalInvariants inv;
  for (std::size_t i = 0; i < m.size(); ++i) inv.eta += m[i] - 1;
  for (std::size_t i = 1; i < m.size(); ++i)
    inv.omega += (m[i - 1] + m[i] - 1) / m[i] - 1;
  inv.chi = inv.eta + inv.omega - 1;
  inv.delta = delta_of(seq);
  return inv;
}

long delta_of(const MultiplicitySequence& seq) {
  long d = 0;
  for (int v : seq) d += static_cast<long>(v) * (v - 1) / 2;
  return d;
}

bool star_condition(int d, int a) {
  int r = d - 3;
  return (r % 2 == 0 && r <= 2 * a) || (r == 2 * a + 1);
}

}  // namespace cuspidal
