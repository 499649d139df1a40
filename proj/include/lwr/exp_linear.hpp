#pragma once

#include <vector>

#include "lwr/scenario.hpp"

namespace lwr {

// Scenario family f_i(x) = b_i * exp(-lambda * x) + c * x with common lambda
// and c.  b must be strictly increasing; the constructor rejects anything
// else rather than sorting silently.
class ExpLinearFamily {
 public:
  ExpLinearFamily(std::vector<double> b, double lambda, double c);

  const std::vector<double>& b() const { return b_; }
  double lambda() const { return lambda_; }
  double c() const { return c_; }
  std::size_t size() const { return b_.size(); }

  // Unconstrained scenarios on the whole line, ids in b order.
  ScenarioSet to_scenario_set() const;

 private:
  std::vector<double> b_;
  double lambda_;
  double c_;
};

// Unconstrained minimizer log(b * lambda / c) / lambda.
double minimizer(const ExpLinear& f);

// Cost above the scenario's own minimum at x.
double regret_at(const ExpLinear& f, double x);

// Closed-form least-worst-regret solution; depends only on the extreme b's.
// Requires at least two scenarios.
double lwr_solution(const ExpLinearFamily& family);

struct ShiftApprox {
  double extreme_minimizer;  // minimizer of the b1*(1+d) scenario, first order
  double pair_solution;      // pair solution, first order: midpoint of the two
};

// First-order approximations for a narrow family {b1, b1*(1+d)}: the extreme
// minimizer moves by d/lambda and the pair solution by d/(2*lambda) from the
// b1 minimizer.  The error is quadratic in d.  c enters only through the b1
// minimizer itself.
ShiftApprox shift_approximations(double b1, double d, double lambda, double c);

// The scale (b_hi - b_lo) / (log b_hi - log b_lo): a probability mix over the
// extremes with this mean b reproduces the least-worst-regret solution.
double equivalence_parameter(double b_lo, double b_hi);

}  // namespace lwr
