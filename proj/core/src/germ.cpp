#include "cuspidal/germ.hpp"

#include <stdexcept>

namespace cuspidal {

namespace {

constexpr int kInfiniteOrder = 1 << 24;

int order_or_infinite(const RationalFunction& r) {
  return r.is_zero() ? kInfiniteOrder : r.order();
}

// Value of v/u at the origin; requires ord v >= ord u.
Rational ratio_value(const RationalFunction& v, const RationalFunction& u) {
  if (v.is_zero()) return 0;
  RationalFunction r = v / u;
  if (r.order() > 0) return 0;
  return r.eval(0);
}

// Tangent direction of the branch: (1:c) encoded as (false, c), or (0:1)
// encoded as (true, -).
struct Direction {
  bool vertical = false;
  Rational c = 0;
  bool operator==(const Direction& o) const {
    return vertical == o.vertical && (vertical || c == o.c);
  }
};

Direction direction(const BranchGerm& g) {
  int ou = order_or_infinite(g.u), ov = order_or_infinite(g.v);
  if (ou > ov) return {true, 0};
  return {false, ratio_value(g.v, g.u)};
}

// Blow up in the chart dictated by the direction, so both germs of an
// intersection use the same chart.
BranchGerm blow_up_along(const BranchGerm& g, const Direction& d) {
  if (d.vertical) return BranchGerm(g.v, g.u / g.v);
  RationalFunction shifted = g.v / g.u - RationalFunction::constant(d.c);
  return BranchGerm(g.u, shifted);
}

}  // namespace

BranchGerm::BranchGerm(RationalFunction u_, RationalFunction v_)
    : u(std::move(u_)), v(std::move(v_)) {
  if (u.is_zero() && v.is_zero())
    throw std::invalid_argument("degenerate germ: both coordinates zero");
  if (!u.is_zero() && u.order() < 1)
    throw std::invalid_argument("germ coordinate does not vanish at 0");
  if (!v.is_zero() && v.order() < 1)
    throw std::invalid_argument("germ coordinate does not vanish at 0");
}

int germ_multiplicity(const BranchGerm& g) {
  return std::min(order_or_infinite(g.u), order_or_infinite(g.v));
}

BranchGerm blow_up(const BranchGerm& g) { return blow_up_along(g, direction(g)); }

MultiplicitySequence mult_sequence(const BranchGerm& g) {
  long ou = order_or_infinite(g.u), ov = order_or_infinite(g.v);
  long guard = 2 * std::min<long>(ou, 1 << 12) * std::min<long>(ov, 1 << 12) + 8;
  MultiplicitySequence seq;
  BranchGerm cur = g;
  for (long depth = 0;; ++depth) {
    if (depth > guard) throw std::runtime_error("resolution did not terminate");
    int m = germ_multiplicity(cur);
    if (m <= 1) break;
    seq.push_back(m);
    cur = blow_up(cur);
  }
  return seq;
}

long germ_intersection(const BranchGerm& g1, const BranchGerm& g2) {
  long o1 = std::min<long>(germ_multiplicity(g1), 1 << 12);
  long o2 = std::min<long>(germ_multiplicity(g2), 1 << 12);
  long guard = (o1 + o2 + 4) * (o1 + o2 + 4);
  long total = 0;
  BranchGerm a = g1, b = g2;
  for (long depth = 0;; ++depth) {
    if (depth > guard) throw std::runtime_error("infinite intersection");
    total += static_cast<long>(germ_multiplicity(a)) * germ_multiplicity(b);
    Direction da = direction(a), db = direction(b);
    if (!(da == db)) break;
    a = blow_up_along(a, da);
    b = blow_up_along(b, db);
  }
  return total;
}

}  // namespace cuspidal
