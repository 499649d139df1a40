#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace lwr {

// Closed decision interval; either endpoint may be infinite.
struct DecisionInterval {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool bounded_below() const { return lower > -std::numeric_limits<double>::infinity(); }
  bool bounded_above() const { return upper < std::numeric_limits<double>::infinity(); }
  bool bounded() const { return bounded_below() && bounded_above(); }
  bool contains(double x) const { return x >= lower && x <= upper; }

  static DecisionInterval whole_line() { return {}; }
};

// f(x) = b * exp(-lambda * x) + c * x.  Strictly convex; b, lambda, c > 0.
struct ExpLinear {
  double b;
  double lambda;
  double c;
};

// f(x) = curvature * (x - center)^2 + offset.  curvature > 0.
struct Quadratic {
  double curvature;
  double center;
  double offset = 0.0;
};

// Continuous piecewise-linear function.  breakpoints strictly increasing;
// slopes has one entry more than breakpoints and is nondecreasing (slopes[j]
// applies left of breakpoints[j], slopes.back() right of the last one).
// anchor is the value at the first breakpoint.
struct PiecewiseLinear {
  std::vector<double> breakpoints;
  std::vector<double> slopes;
  double anchor = 0.0;
};

// Sampled convex function: linear interpolation between samples, linear
// extrapolation with the end-segment slopes outside.  x strictly increasing;
// successive chord slopes nondecreasing.
struct TabulatedConvex {
  std::vector<double> x;
  std::vector<double> y;
};

using CostFunction = std::variant<ExpLinear, Quadratic, PiecewiseLinear, TabulatedConvex>;

// One-sided derivatives; left == right except at kinks, and left <= right.
struct SlopePair {
  double left;
  double right;
};

double evaluate(const CostFunction& f, double x);
SlopePair slopes(const CostFunction& f, double x);

struct Scenario {
  int id = 0;
  std::string name;
  CostFunction cost;
};

// Invariants (enforced by validate, assumed by the solvers): nonempty, ids
// unique and contiguous from 0, interval.lower < interval.upper, every cost
// function convex with the parameter constraints above.
struct ScenarioSet {
  std::vector<Scenario> scenarios;
  DecisionInterval interval;

  std::size_t size() const { return scenarios.size(); }
};

struct Violation {
  int scenario_id = -1;   // -1 for set-level problems
  int sample_index = -1;  // sample/slope position when that is what is wrong
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Reports every invariant violation it can find; never throws.
ValidationReport validate(const ScenarioSet& set);

}  // namespace lwr
