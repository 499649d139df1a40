#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lwr/scenario.hpp"
#include "lwr/solve.hpp"

namespace lwr {

// Units are fixed throughout this module and never converted: capacity in MW,
// energy in MWh, money in pounds, loss-of-load expectation in hours per year.
// Gigawatts appear only in report formatting (MW / 1000).

// Exponential adequacy model as a function of procured capacity x:
//   EEU(x)  = eeu_at_zero * exp(-rate * x)      expected energy unserved, MWh/yr
//   LOLE(x) = rate * EEU(x)                     expected shortfall hours, h/yr
// so d/dx EEU = -LOLE.  eeu_at_zero > 0, rate > 0.
struct AdequacyCurve {
  double eeu_at_zero = 0.0;
  double rate = 0.0;

  double eeu(double x) const;
  double lole(double x) const;
};

struct CapacityScenario {
  std::string name;
  AdequacyCurve curve;
};

// voll: value of lost load, pounds/MWh.  cone: net cost of new entry,
// pounds/MW/yr.  standard: reliability standard, h/yr.  All positive.  The
// cost-optimal shortfall cone/voll is expected to sit below twice the
// standard for the procurement quantities here to be commensurate.
struct CapacityStudy {
  std::vector<CapacityScenario> scenarios;
  double voll = 0.0;
  double cone = 0.0;
  double standard = 0.0;
};

// Annual cost of procuring x under scenario i:
//   voll * EEU_i(x) + cone * x
// which is ExpLinear with b = voll * eeu_at_zero, lambda = rate, c = cone.
CostFunction cost_function(const CapacityStudy& study, std::size_t i);

// Unconstrained scenario set over the whole line, ids in study order.
ScenarioSet to_scenario_set(const CapacityStudy& study);

// cone / voll: the shortfall level every scenario's cost minimizer attains.
// Verifies LOLE at each scenario's own cost minimizer against the ratio
// within 1e-9 relative before returning it.
double optimal_lole(const CapacityStudy& study);

struct ReliabilityCapacity {
  double mw = 0.0;
  bool already_adequate = false;  // LOLE(0) <= standard, so mw = 0
};

// Capacity at which the curve meets the reliability standard.
ReliabilityCapacity reliability_capacity(const AdequacyCurve& curve, double standard);

// Per-scenario reliability capacities, sorted and deduplicated within 1e-6 MW.
std::vector<double> discrete_decision_set(const CapacityStudy& study);

struct DiscreteLwrResult {
  double chosen = 0.0;        // point with the least worst regret
  double worst_regret = 0.0;  // pounds at the chosen point
  double gap = 0.0;           // |chosen - continuous solution|, MW
};

// Least worst regret restricted to the given capacity points.  Regret offsets
// come from the continuous (unrestricted) scenario minima, so the discrete
// choice is measured against what each scenario could ideally reach.
DiscreteLwrResult solve_lwr_discrete(const CapacityStudy& study,
                                     const std::vector<double>& points,
                                     double tol = kDefaultTol);

struct EnsembleConfig {
  int n = 0;              // scenario count, >= 2
  double a_low = 0.0;     // EEU(0) range, MWh/yr; 0 < a_low < a_high
  double a_high = 0.0;
  double rate = 0.0;      // per MW
  double voll = 0.0;
  double cone = 0.0;
  double standard = 3.0;  // h/yr
  std::uint64_t seed = 0;
};

// Deterministic study: extreme scenarios pinned to the EEU(0) range ends,
// middles drawn log-uniform in between from the seed, sorted ascending.
CapacityStudy synthetic_ensemble(const EnsembleConfig& config);

}  // namespace lwr
