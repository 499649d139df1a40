#include "lwr/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lwr/errors.hpp"
#include "lwr/exp_linear.hpp"

namespace lwr {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw DomainError("probability vector is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0) || !std::isfinite(p_[i]))
      throw DomainError("probability at position " + std::to_string(i) +
                        " must be nonnegative");
    sum += p_[i];
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw DomainError("probabilities must sum to 1 within 1e-12");
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  if (n == 0) throw DomainError("probability vector is empty");
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) sum += p[i];
  p.back() = 1.0 - sum;
  return ProbabilityVector(std::move(p));
}

ProbabilityVector ProbabilityVector::degenerate(std::size_t n, std::size_t j) {
  if (j >= n) throw DomainError("degenerate index out of range");
  std::vector<double> p(n, 0.0);
  p[j] = 1.0;
  return ProbabilityVector(std::move(p));
}

ProbabilityVector ProbabilityVector::two_point(std::size_t n, std::size_t k,
                                               std::size_t l, double pk) {
  if (k >= n || l >= n || k == l) throw DomainError("invalid two-point support");
  std::vector<double> p(n, 0.0);
  p[k] = pk;
  p[l] = 1.0 - pk;
  return ProbabilityVector(std::move(p));
}

double expected_cost(const ScenarioSet& set, const ProbabilityVector& p, double x) {
  if (p.size() != set.size())
    throw DimensionError("probability length does not match the scenario count");
  double sum = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i)
    sum += p[i] * evaluate(set.scenarios[i].cost, x);
  return sum;
}

namespace {

bool all_exp_linear(const ScenarioSet& set) {
  for (const auto& s : set.scenarios)
    if (!std::holds_alternative<ExpLinear>(s.cost)) return false;
  return true;
}

// Root of sum_i p_i b_i lambda_i exp(-lambda_i x) = sum_i p_i c_i, which is
// where the expected-cost derivative vanishes.  The residual is strictly
// decreasing, and the supported scenarios' own minimizers bracket the root.
SolveResult bisect_exp_linear(const ScenarioSet& set, const ProbabilityVector& p,
                              double tol) {
  auto residual = [&](double x) {
    double s = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (p[i] == 0.0) continue;
      const auto& f = std::get<ExpLinear>(set.scenarios[i].cost);
      s += p[i] * (f.b * f.lambda * std::exp(-f.lambda * x) - f.c);
    }
    return s;
  };

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (p[i] == 0.0) continue;
    const double m = minimizer(std::get<ExpLinear>(set.scenarios[i].cost));
    lo = first ? m : std::min(lo, m);
    hi = first ? m : std::max(hi, m);
    first = false;
  }
  double width = std::max(1.0, hi - lo);
  for (int guard = 0; residual(lo) < 0.0 && guard < 64; ++guard) lo -= width, width *= 2.0;
  width = std::max(1.0, hi - lo);
  for (int guard = 0; residual(hi) > 0.0 && guard < 64; ++guard) hi += width, width *= 2.0;

  int iter = 0;
  while (hi - lo > tol && iter < 200) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) > 0.0) lo = mid;
    else hi = mid;
    ++iter;
  }
  double x = 0.5 * (lo + hi);
  // A finite decision interval clamps the stationary point exactly.
  if (x < set.interval.lower) x = lo = hi = set.interval.lower;
  if (x > set.interval.upper) x = lo = hi = set.interval.upper;
  return {x, expected_cost(set, p, x), iter, lo, hi};
}

}  // namespace

SolveResult solve_bayes(const ScenarioSet& set, const ProbabilityVector& p, double tol) {
  if (p.size() != set.size())
    throw DimensionError("probability length does not match the scenario count");
  if (all_exp_linear(set)) return bisect_exp_linear(set, p, tol);
  return minimize([&](double x) { return expected_cost(set, p, x); }, set.interval, tol);
}

ProbabilityVector compatible_pair_probability(const ScenarioSet& set, int k, int l,
                                              double x_target) {
  const int n = static_cast<int>(set.size());
  if (k < 0 || k >= n || l < 0 || l >= n || k == l)
    throw DomainError("k and l must be distinct scenario ids");
  if (!(x_target > set.interval.lower && x_target < set.interval.upper))
    throw DomainError("target must be interior to the decision interval");

  const SlopePair sk = slopes(set.scenarios[static_cast<std::size_t>(k)].cost, x_target);
  const SlopePair sl = slopes(set.scenarios[static_cast<std::size_t>(l)].cost, x_target);
  const bool opposite =
      (sk.right > 0.0 && sl.left < 0.0) || (sl.right > 0.0 && sk.left < 0.0);
  if (!opposite)
    throw NoSolutionError("pair slopes at the target share a sign");

  double pk;
  if (sk.left <= 0.0 && sk.right >= 0.0) {
    pk = 1.0;  // k alone is stationary at the target
  } else if (sl.left <= 0.0 && sl.right >= 0.0) {
    pk = 0.0;
  } else {
    const double dk = 0.5 * (sk.left + sk.right);
    const double dl = 0.5 * (sl.left + sl.right);
    pk = -dl / (dk - dl);
  }
  return ProbabilityVector::two_point(set.size(), static_cast<std::size_t>(k),
                                      static_cast<std::size_t>(l), pk);
}

bool is_compatible(const ScenarioSet& set, const ProbabilityVector& p, double x_target,
                   double tol) {
  if (p.size() != set.size())
    throw DimensionError("probability length does not match the scenario count");
  double lo = 0.0, hi = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (p[i] == 0.0) continue;
    const SlopePair s = slopes(set.scenarios[i].cost, x_target);
    lo += p[i] * s.left;
    hi += p[i] * s.right;
    scale += p[i] * std::max(std::fabs(s.left), std::fabs(s.right));
  }
  const double slack = tol * (1.0 + scale);
  return lo <= slack && hi >= -slack;
}

}  // namespace lwr
