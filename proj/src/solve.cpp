#include "lwr/solve.hpp"

#include <algorithm>
#include <cmath>

#include "lwr/errors.hpp"

namespace lwr {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio
constexpr int kMaxExpand = 107;                 // widths 2^0 .. 2^106
constexpr int kMaxIter = 500;

struct Bracket {
  double lo;
  double hi;
};

// Walks probe points with doubling spacing away from `anchor` in `dir` until
// the values stop decreasing.  For a convex f a non-decrease at width 2^k
// confines every minimizer to within width 2^k of the anchor.
Bracket expand_from(const Objective1D& f, double anchor, double f_anchor, int dir) {
  double prev_f = f_anchor;
  double width = 1.0;
  for (int k = 0; k < kMaxExpand; ++k, width *= 2.0) {
    const double x = anchor + dir * width;
    const double fx = f(x);
    if (fx >= prev_f) {
      return dir > 0 ? Bracket{anchor, x} : Bracket{x, anchor};
    }
    prev_f = fx;
  }
  throw UnboundedBelowError("objective still decreasing after bracket expansion to width 2^106");
}

Bracket finite_bracket(const Objective1D& f, const DecisionInterval& interval) {
  const bool below = interval.bounded_below();
  const bool above = interval.bounded_above();
  if (below && above) return {interval.lower, interval.upper};
  if (below) return expand_from(f, interval.lower, f(interval.lower), +1);
  if (above) return expand_from(f, interval.upper, f(interval.upper), -1);

  const double f0 = f(0.0);
  const double fl = f(-1.0);
  const double fr = f(1.0);
  if (f0 <= fl && f0 <= fr) return {-1.0, 1.0};
  // Convexity puts every minimizer on the descending side of 0.
  if (fr < f0) return expand_from(f, 0.0, f0, +1);
  return expand_from(f, 0.0, f0, -1);
}

// Ties (f(c) == f(d)) shrink from the right, which keeps the leftmost
// minimizer of the bracket inside [a, b] throughout.
SolveResult golden_section(const Objective1D& f, Bracket br, double tol) {
  double a = br.lo;
  double b = br.hi;
  int iter = 0;
  if (b - a > tol) {
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol && iter < kMaxIter) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = f(d);
      }
      ++iter;
      if (!(a <= c && c <= d && d <= b)) break;  // float resolution reached
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), iter, a, b};
}

}  // namespace

SolveResult minimize(const Objective1D& f, const DecisionInterval& interval, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw InvalidToleranceError("tolerance must be positive and finite");
  if (!(interval.lower < interval.upper))
    throw DomainError("interval lower bound must be below the upper bound");
  return golden_section(f, finite_bracket(f, interval), tol);
}

MaxSolveResult minimize_pointwise_max(const std::vector<Objective1D>& fs,
                                      const DecisionInterval& interval, double tol) {
  if (fs.empty()) throw DomainError("need at least one objective");
  Objective1D g = [&fs](double x) {
    double m = fs.front()(x);
    for (std::size_t i = 1; i < fs.size(); ++i) m = std::max(m, fs[i](x));
    return m;
  };
  MaxSolveResult result;
  result.solve = minimize(g, interval, tol);
  const double top = result.solve.value;
  const double activity = kActivityTolRel * (1.0 + std::fabs(top));
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i](result.solve.minimizer) >= top - activity)
      result.active.push_back(static_cast<int>(i));
  return result;
}

}  // namespace lwr
