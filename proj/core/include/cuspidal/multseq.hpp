#pragma once

#include <vector>

namespace cuspidal {

/// Multiplicity sequence of a cusp: weakly decreasing entries, all >= 2;
/// trailing 1s are never stored.
using MultiplicitySequence = std::vector<int>;

struct LocalInvariants {
  long eta = 0;
  long omega = 0;
  long chi = 0;   // eta + omega - 1
  long delta = 0;
  bool operator==(const LocalInvariants&) const = default;
};

/// True iff the sequence, extended by trailing 1s, satisfies the blow-up
/// characteristic property: each entry either repeats or equals the sum of a
/// constant run of successors plus the entry after the run.
/// Throws on entries < 2 or an increasing step.
bool validate(const MultiplicitySequence& seq);

/// eta, omega (and chi = eta + omega - 1) computed with exactly one trailing
/// 1 appended; delta summed over the stored entries. Requires validate(seq).
LocalInvariants local_invariants(const MultiplicitySequence& seq);

/// Delta alone, without the validity requirement.
long delta_of(const MultiplicitySequence& seq);

/// Arithmetic condition for (d-3, 2_a) to be a valid multiplicity sequence:
/// d-3 even with d-3 <= 2a, or d-3 = 2a+1.
bool star_condition(int d, int a);

}  // namespace cuspidal
