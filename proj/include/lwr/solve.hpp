#pragma once

#include <functional>
#include <vector>

#include "lwr/scenario.hpp"

namespace lwr {

using Objective1D = std::function<double(double)>;

// Default argument tolerance for the 1-D solvers.
inline constexpr double kDefaultTol = 1e-9;
// Relative activity tolerance: |f_i(x*) - max| <= kActivityTolRel * (1 + |max|).
inline constexpr double kActivityTolRel = 1e-7;
// Relative certificate tolerance used when checking pair determination.
inline constexpr double kCertificateTolRel = 1e-7;

struct SolveResult {
  double minimizer = 0.0;
  double value = 0.0;
  int iterations = 0;
  double bracket_lo = 0.0;  // final bracket; contains the minimizer
  double bracket_hi = 0.0;  // bracket_hi - bracket_lo <= tol on normal exit
};

// Golden-section minimization of a convex objective over the interval.
// Infinite sides are reduced to a finite bracket by doubling probe widths
// (start 1, cap 2^106); still-descending values at the cap raise
// UnboundedBelowError.  Flat minima resolve to the leftmost minimizer of the
// located bracket, so the result is deterministic for non-strictly-convex
// objectives.
SolveResult minimize(const Objective1D& f, const DecisionInterval& interval,
                     double tol = kDefaultTol);

struct MaxSolveResult {
  SolveResult solve;
  std::vector<int> active;  // indices whose value is within the activity
                            // tolerance of the max at the minimizer, ascending
};

// Minimizes max_i fs[i](x) over the interval.  fs must be nonempty and each
// entry convex; the pointwise max is then convex as well.
MaxSolveResult minimize_pointwise_max(const std::vector<Objective1D>& fs,
                                      const DecisionInterval& interval,
                                      double tol = kDefaultTol);

}  // namespace lwr
