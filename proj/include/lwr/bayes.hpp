#pragma once

#include <cstddef>
#include <vector>

#include "lwr/scenario.hpp"
#include "lwr/solve.hpp"

namespace lwr {

// Scenario weights: nonnegative, summing to 1 within 1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  static ProbabilityVector uniform(std::size_t n);
  static ProbabilityVector degenerate(std::size_t n, std::size_t j);
  // All weight on k and l; p[k] = pk.
  static ProbabilityVector two_point(std::size_t n, std::size_t k, std::size_t l,
                                     double pk);

  const std::vector<double>& weights() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }
  std::size_t size() const { return p_.size(); }

 private:
  std::vector<double> p_;
};

double expected_cost(const ScenarioSet& set, const ProbabilityVector& p, double x);

// Minimizes the expected cost over the decision interval.  All-ExpLinear sets
// go through bisection on the strictly decreasing derivative sum (bracketed
// by the supported scenarios' own minimizers); anything else through the
// generic convex solver.
SolveResult solve_bayes(const ScenarioSet& set, const ProbabilityVector& p,
                        double tol = kDefaultTol);

// The unique two-point mix over scenarios k and l whose expected cost is
// stationary at x_target.  Requires opposite slope signs there:
// NoSolutionError when both slopes share a sign.
ProbabilityVector compatible_pair_probability(const ScenarioSet& set, int k, int l,
                                              double x_target);

// True iff x_target is stationary for the expected cost under p: the weighted
// one-sided slope interval contains zero within tol * (1 + slope scale).
bool is_compatible(const ScenarioSet& set, const ProbabilityVector& p,
                   double x_target, double tol = 1e-9);

}  // namespace lwr
