#include "lwr/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace lwr {
namespace {

double eval_exp_linear(const ExpLinear& f, double x) {
  return f.b * std::exp(-f.lambda * x) + f.c * x;
}

double eval_quadratic(const Quadratic& f, double x) {
  const double d = x - f.center;
  return f.curvature * d * d + f.offset;
}

double eval_piecewise(const PiecewiseLinear& f, double x) {
  const auto& bp = f.breakpoints;
  double v = f.anchor;
  if (x < bp.front()) return v + f.slopes.front() * (x - bp.front());
  for (std::size_t j = 1; j < bp.size(); ++j) {
    if (x <= bp[j]) return v + f.slopes[j] * (x - bp[j - 1]);
    v += f.slopes[j] * (bp[j] - bp[j - 1]);
  }
  return v + f.slopes.back() * (x - bp.back());
}

double chord(const TabulatedConvex& f, std::size_t j) {
  return (f.y[j + 1] - f.y[j]) / (f.x[j + 1] - f.x[j]);
}

double eval_tabulated(const TabulatedConvex& f, double x) {
  const std::size_t n = f.x.size();
  if (x <= f.x.front()) return f.y.front() + chord(f, 0) * (x - f.x.front());
  if (x >= f.x.back()) return f.y.back() + chord(f, n - 2) * (x - f.x.back());
  std::size_t j = 1;
  while (f.x[j] < x) ++j;
  const double t = (x - f.x[j - 1]) / (f.x[j] - f.x[j - 1]);
  return f.y[j - 1] + t * (f.y[j] - f.y[j - 1]);
}

SlopePair slopes_piecewise(const PiecewiseLinear& f, double x) {
  const auto& bp = f.breakpoints;
  if (x < bp.front()) return {f.slopes.front(), f.slopes.front()};
  for (std::size_t j = 0; j < bp.size(); ++j) {
    if (x == bp[j]) return {f.slopes[j], f.slopes[j + 1]};
    if (x < bp[j]) return {f.slopes[j], f.slopes[j]};
  }
  return {f.slopes.back(), f.slopes.back()};
}

SlopePair slopes_tabulated(const TabulatedConvex& f, double x) {
  const std::size_t n = f.x.size();
  if (x <= f.x.front()) return {chord(f, 0), chord(f, 0)};
  if (x >= f.x.back()) return {chord(f, n - 2), chord(f, n - 2)};
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (x == f.x[j]) return {chord(f, j - 1), chord(f, j)};
    if (x < f.x[j]) return {chord(f, j - 1), chord(f, j - 1)};
  }
  return {chord(f, n - 2), chord(f, n - 2)};
}

}  // namespace

double evaluate(const CostFunction& f, double x) {
  return std::visit(
      [x](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExpLinear>) return eval_exp_linear(g, x);
        else if constexpr (std::is_same_v<T, Quadratic>) return eval_quadratic(g, x);
        else if constexpr (std::is_same_v<T, PiecewiseLinear>) return eval_piecewise(g, x);
        else return eval_tabulated(g, x);
      },
      f);
}

SlopePair slopes(const CostFunction& f, double x) {
  return std::visit(
      [x](const auto& g) -> SlopePair {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExpLinear>) {
          const double s = -g.b * g.lambda * std::exp(-g.lambda * x) + g.c;
          return {s, s};
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          const double s = 2.0 * g.curvature * (x - g.center);
          return {s, s};
        } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          return slopes_piecewise(g, x);
        } else {
          return slopes_tabulated(g, x);
        }
      },
      f);
}

namespace {

std::string fmt(const char* pat, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pat, v);
  return buf;
}

void check_cost(const Scenario& s, std::vector<Violation>& out) {
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExpLinear>) {
          if (!(g.b > 0.0) || !std::isfinite(g.b))
            out.push_back({s.id, -1, "exp_linear b must be positive, got " + fmt("%g", g.b)});
          if (!(g.lambda > 0.0) || !std::isfinite(g.lambda))
            out.push_back({s.id, -1, "exp_linear lambda must be positive, got " + fmt("%g", g.lambda)});
          if (!(g.c > 0.0) || !std::isfinite(g.c))
            out.push_back({s.id, -1, "exp_linear c must be positive, got " + fmt("%g", g.c)});
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          if (!(g.curvature > 0.0) || !std::isfinite(g.curvature))
            out.push_back({s.id, -1, "quadratic curvature must be positive, got " + fmt("%g", g.curvature)});
          if (!std::isfinite(g.center))
            out.push_back({s.id, -1, "quadratic center must be finite"});
          if (!std::isfinite(g.offset))
            out.push_back({s.id, -1, "quadratic offset must be finite"});
        } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          if (g.breakpoints.empty()) {
            out.push_back({s.id, -1, "piecewise_linear needs at least one breakpoint"});
            return;
          }
          if (g.slopes.size() != g.breakpoints.size() + 1) {
            out.push_back({s.id, -1, "piecewise_linear needs one more slope than breakpoints"});
            return;
          }
          for (std::size_t j = 1; j < g.breakpoints.size(); ++j)
            if (!(g.breakpoints[j] > g.breakpoints[j - 1]))
              out.push_back({s.id, static_cast<int>(j),
                             "breakpoints must be strictly increasing at index " + std::to_string(j)});
          for (std::size_t j = 1; j < g.slopes.size(); ++j)
            if (g.slopes[j] < g.slopes[j - 1])
              out.push_back({s.id, static_cast<int>(j),
                             "slopes must be nondecreasing, violated at index " + std::to_string(j)});
        } else {
          if (g.x.size() < 2 || g.y.size() != g.x.size()) {
            out.push_back({s.id, -1, "tabulated needs matching x and y with at least two samples"});
            return;
          }
          for (std::size_t j = 1; j < g.x.size(); ++j)
            if (!(g.x[j] > g.x[j - 1]))
              out.push_back({s.id, static_cast<int>(j),
                             "tabulated x must be strictly increasing at sample " + std::to_string(j)});
          // Discrete convexity: chord slopes nondecreasing, 1e-12 relative slack.
          for (std::size_t j = 0; j + 2 < g.x.size(); ++j) {
            const double c0 = chord(g, j);
            const double c1 = chord(g, j + 1);
            const double slack = 1e-12 * std::max({1.0, std::fabs(c0), std::fabs(c1)});
            if (c1 < c0 - slack)
              out.push_back({s.id, static_cast<int>(j + 1),
                             "tabulated chord slopes decrease at sample " + std::to_string(j + 1)});
          }
        }
      },
      s.cost);
}

}  // namespace

ValidationReport validate(const ScenarioSet& set) {
  ValidationReport report;
  auto& out = report.violations;

  if (set.scenarios.empty()) {
    out.push_back({-1, -1, "scenario set is empty"});
    return report;
  }
  if (!(set.interval.lower < set.interval.upper))
    out.push_back({-1, -1, "interval lower bound must be below the upper bound"});

  std::unordered_set<int> seen;
  for (const auto& s : set.scenarios) {
    if (!seen.insert(s.id).second)
      out.push_back({s.id, -1, "duplicate scenario id " + std::to_string(s.id)});
  }
  for (std::size_t i = 0; i < set.scenarios.size(); ++i) {
    if (set.scenarios[i].id != static_cast<int>(i))
      out.push_back({set.scenarios[i].id, -1,
                     "scenario ids must be contiguous from 0; position " + std::to_string(i) +
                         " holds id " + std::to_string(set.scenarios[i].id)});
  }

  for (const auto& s : set.scenarios) check_cost(s, out);

  // Every cost must be finite somewhere the solvers may probe.
  if (set.interval.lower < set.interval.upper) {
    double probe = 0.0;
    if (probe < set.interval.lower) probe = set.interval.lower;
    if (probe > set.interval.upper) probe = set.interval.upper;
    for (const auto& s : set.scenarios) {
      bool structurally_ok = true;
      for (const auto& v : out)
        if (v.scenario_id == s.id) structurally_ok = false;
      if (structurally_ok && !std::isfinite(evaluate(s.cost, probe)))
        out.push_back({s.id, -1, "cost is not finite at x = " + fmt("%g", probe)});
    }
  }
  return report;
}

}  // namespace lwr
