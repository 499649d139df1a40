#include "lwr/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "lwr/errors.hpp"
#include "lwr/exp_linear.hpp"
#include "lwr/regret.hpp"

namespace lwr {

double AdequacyCurve::eeu(double x) const { return eeu_at_zero * std::exp(-rate * x); }

double AdequacyCurve::lole(double x) const { return rate * eeu(x); }

namespace {

void require_study(const CapacityStudy& study) {
  if (study.scenarios.empty()) throw DomainError("study has no scenarios");
  if (!(study.voll > 0.0)) throw DomainError("voll must be positive");
  if (!(study.cone > 0.0)) throw DomainError("cone must be positive");
  if (!(study.standard > 0.0)) throw DomainError("standard must be positive");
  for (const auto& s : study.scenarios) {
    if (!(s.curve.eeu_at_zero > 0.0))
      throw DomainError("scenario '" + s.name + "' needs positive eeu_at_zero");
    if (!(s.curve.rate > 0.0))
      throw DomainError("scenario '" + s.name + "' needs positive rate");
  }
}

}  // namespace

CostFunction cost_function(const CapacityStudy& study, std::size_t i) {
  require_study(study);
  if (i >= study.scenarios.size()) throw DomainError("scenario index out of range");
  const AdequacyCurve& curve = study.scenarios[i].curve;
  return ExpLinear{study.voll * curve.eeu_at_zero, curve.rate, study.cone};
}

ScenarioSet to_scenario_set(const CapacityStudy& study) {
  require_study(study);
  ScenarioSet set;
  set.interval = DecisionInterval::whole_line();
  set.scenarios.reserve(study.scenarios.size());
  for (std::size_t i = 0; i < study.scenarios.size(); ++i)
    set.scenarios.push_back({static_cast<int>(i), study.scenarios[i].name,
                             cost_function(study, i)});
  return set;
}

double optimal_lole(const CapacityStudy& study) {
  require_study(study);
  const double ratio = study.cone / study.voll;
  // Every scenario's cost minimizer lands on the same shortfall level; verify
  // the identity numerically before handing the ratio out.
  for (std::size_t i = 0; i < study.scenarios.size(); ++i) {
    const auto f = std::get<ExpLinear>(cost_function(study, i));
    const double at_minimizer = study.scenarios[i].curve.lole(minimizer(f));
    if (std::fabs(at_minimizer - ratio) > 1e-9 * ratio)
      throw Error("scenario '" + study.scenarios[i].name +
                  "' misses the cost-optimal shortfall level");
  }
  return ratio;
}

ReliabilityCapacity reliability_capacity(const AdequacyCurve& curve, double standard) {
  if (!(curve.eeu_at_zero > 0.0) || !(curve.rate > 0.0))
    throw DomainError("curve parameters must be positive");
  if (!(standard > 0.0)) throw DomainError("standard must be positive");
  const double lole0 = curve.lole(0.0);
  if (lole0 <= standard) return {0.0, true};
  return {std::log(lole0 / standard) / curve.rate, false};
}

std::vector<double> discrete_decision_set(const CapacityStudy& study) {
  require_study(study);
  std::vector<double> points;
  points.reserve(study.scenarios.size());
  for (const auto& s : study.scenarios)
    points.push_back(reliability_capacity(s.curve, study.standard).mw);
  std::sort(points.begin(), points.end());
  std::vector<double> unique;
  for (double p : points)
    if (unique.empty() || p - unique.back() > 1e-6) unique.push_back(p);
  return unique;
}

DiscreteLwrResult solve_lwr_discrete(const CapacityStudy& study,
                                     const std::vector<double>& points, double tol) {
  require_study(study);
  if (points.empty()) throw DomainError("no capacity points to choose from");

  const ScenarioSet set = to_scenario_set(study);
  const RegretProfile profile = regret_profile(set, tol);
  const AnalysisOutcome continuous = solve_lwr(set, tol);

  DiscreteLwrResult result;
  bool first = true;
  for (double x : points) {
    const double wr = worst_regret(set, profile, x);
    if (first || wr < result.worst_regret) {
      result.chosen = x;
      result.worst_regret = wr;
      first = false;
    }
  }
  result.gap = std::fabs(result.chosen - continuous.solution);
  return result;
}

CapacityStudy synthetic_ensemble(const EnsembleConfig& config) {
  if (config.n < 2) throw ConfigError("need at least two scenarios");
  if (!(config.a_low > 0.0) || !(config.a_high > config.a_low))
    throw ConfigError("need 0 < a_low < a_high");
  if (!(config.rate > 0.0)) throw ConfigError("rate must be positive");
  if (!(config.voll > 0.0)) throw ConfigError("voll must be positive");
  if (!(config.cone > 0.0)) throw ConfigError("cone must be positive");
  if (!(config.standard > 0.0)) throw ConfigError("standard must be positive");
  if (!(config.cone / config.voll < 2.0 * config.standard))
    throw ConfigError("cone/voll must stay below twice the reliability standard");

  // Extremes pinned to the range ends; middles log-uniform from the seed.
  // Uniform doubles are built from the raw engine output so the draw is
  // reproducible everywhere.
  std::vector<double> a_values;
  a_values.reserve(static_cast<std::size_t>(config.n));
  a_values.push_back(config.a_low);
  std::mt19937_64 rng(config.seed);
  const double log_lo = std::log(config.a_low);
  const double log_hi = std::log(config.a_high);
  for (int i = 0; i < config.n - 2; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    a_values.push_back(std::exp(log_lo + u * (log_hi - log_lo)));
  }
  a_values.push_back(config.a_high);
  std::sort(a_values.begin(), a_values.end());

  CapacityStudy study;
  study.voll = config.voll;
  study.cone = config.cone;
  study.standard = config.standard;
  study.scenarios.reserve(a_values.size());
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "scenario-%02zu", i + 1);
    study.scenarios.push_back({name, {a_values[i], config.rate}});
  }
  return study;
}

}  // namespace lwr
