#include "lwr/exp_linear.hpp"

#include <cmath>
#include <string>

#include "lwr/errors.hpp"

namespace lwr {

ExpLinearFamily::ExpLinearFamily(std::vector<double> b, double lambda, double c)
    : b_(std::move(b)), lambda_(lambda), c_(c) {
  if (b_.empty()) throw DomainError("family needs at least one scenario");
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_))
    throw DomainError("lambda must be positive");
  if (!(c_ > 0.0) || !std::isfinite(c_)) throw DomainError("c must be positive");
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (!(b_[i] > 0.0) || !std::isfinite(b_[i]))
      throw DomainError("b must be positive at position " + std::to_string(i));
    if (i > 0 && !(b_[i] > b_[i - 1]))
      throw DomainError("b must be strictly increasing at position " + std::to_string(i));
  }
}

ScenarioSet ExpLinearFamily::to_scenario_set() const {
  ScenarioSet set;
  set.interval = DecisionInterval::whole_line();
  set.scenarios.reserve(b_.size());
  for (std::size_t i = 0; i < b_.size(); ++i)
    set.scenarios.push_back({static_cast<int>(i), "b=" + std::to_string(b_[i]),
                             ExpLinear{b_[i], lambda_, c_}});
  return set;
}

namespace {

void require_positive(const ExpLinear& f) {
  if (!(f.b > 0.0) || !(f.lambda > 0.0) || !(f.c > 0.0))
    throw DomainError("exp-linear parameters must be positive");
}

}  // namespace

double minimizer(const ExpLinear& f) {
  require_positive(f);
  return std::log(f.b * f.lambda / f.c) / f.lambda;
}

double regret_at(const ExpLinear& f, double x) {
  require_positive(f);
  return f.b * std::exp(-f.lambda * x) + f.c * x -
         (f.c / f.lambda) * (1.0 + std::log(f.b * f.lambda / f.c));
}

double lwr_solution(const ExpLinearFamily& family) {
  if (family.size() < 2)
    throw DomainError("least-worst-regret needs at least two scenarios");
  const double b_lo = family.b().front();
  const double b_hi = family.b().back();
  return std::log(family.lambda() * (b_hi - b_lo) /
                  (family.c() * (std::log(b_hi) - std::log(b_lo)))) /
         family.lambda();
}

ShiftApprox shift_approximations(double b1, double d, double lambda, double c) {
  if (!(b1 > 0.0)) throw DomainError("b1 must be positive");
  if (!(d > 0.0)) throw DomainError("d must be positive");
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  if (!(c > 0.0)) throw DomainError("c must be positive");
  const double x1 = minimizer(ExpLinear{b1, lambda, c});
  return {x1 + d / lambda, x1 + d / (2.0 * lambda)};
}

double equivalence_parameter(double b_lo, double b_hi) {
  if (!(0.0 < b_lo && b_lo < b_hi))
    throw DomainError("need 0 < b_lo < b_hi");
  return (b_hi - b_lo) / (std::log(b_hi) - std::log(b_lo));
}

}  // namespace lwr
