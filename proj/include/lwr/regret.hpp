#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lwr/scenario.hpp"
#include "lwr/solve.hpp"

namespace lwr {

// Evaluable convex function with exact one-sided slopes; the regret and
// pair-selection machinery works on these rather than on raw variants so the
// same code path serves costs and regrets (which share slopes).
struct ConvexFunction1D {
  Objective1D value;
  std::function<SlopePair(double)> slope;
};

ConvexFunction1D lift(const CostFunction& f, double offset = 0.0);

enum class Criterion { Minimax, Lwr };

// Per-scenario constrained minimizers and minima over the decision interval,
// indexed like ScenarioSet::scenarios.
struct RegretProfile {
  std::vector<double> minimizer;
  std::vector<double> minimum;
};

struct ExtremePair {
  int k = 0;  // active scenario rising at the solution (equals l when one
  int l = 0;  // scenario dominates); l is the falling partner
};

enum class PairCase { SingleScenario, Crossing };

struct PairSelection {
  ExtremePair pair;
  PairCase kind;
};

struct AnalysisOutcome {
  Criterion criterion = Criterion::Minimax;
  double solution = 0.0;
  double objective = 0.0;
  std::vector<int> active;                 // scenario ids, ascending
  std::optional<ExtremePair> extreme_pair; // absent if selection failed
  bool determined = false;                 // pair certificate verified
};

struct ShiftStructure {
  std::vector<double> grid;       // canonical grid, reference frame
  std::vector<double> reference;  // common shape sampled on the grid
  std::vector<double> shifts;     // per scenario, relative to scenario 0
  double max_deviation = 0.0;
};

struct RestrictionReport {
  double full_solution = 0.0;
  double restricted_solution = 0.0;
  std::vector<int> changed_offsets;  // scenarios whose minimum moved
  // Two sub-interval points whose worst-regret ordering flips between the
  // full-interval and sub-interval offset regimes, when the grid finds one.
  std::optional<std::pair<double, double>> reversal_witness;
};

double max_cost(const ScenarioSet& set, double x);

// Requires every cost bounded below on the interval; an unbounded scenario
// raises UnboundedBelowError naming it.
RegretProfile regret_profile(const ScenarioSet& set, double tol = kDefaultTol);

double worst_regret(const ScenarioSet& set, const RegretProfile& profile, double x);

AnalysisOutcome solve_minimax(const ScenarioSet& set, double tol = kDefaultTol);
AnalysisOutcome solve_lwr(const ScenarioSet& set, double tol = kDefaultTol);

// Selects the one or two active scenarios that reproduce the full-set
// solution, by the sign pattern of one-sided slopes at the solution:
//   - an active scenario whose subgradient contains zero there (or that sits
//     against the matching interval boundary) carries the solution alone;
//   - otherwise a rising active scenario pairs with a falling one, and their
//     pointwise max is minimized at the same point.
// Candidates are tried lowest-id first and certified before being returned;
// CertificateError if none qualifies, which indicates solver inaccuracy or
// non-convex input.
PairSelection find_extreme_pair(const std::vector<ConvexFunction1D>& fs,
                                const DecisionInterval& interval,
                                double solution, const std::vector<int>& active,
                                double tol = kDefaultTol);

// True iff the pair's own solution already bounds every scenario: no third
// cost (mode Minimax) or regret (mode Lwr) exceeds the pair's value at the
// pair's minimizer, within 1e-7 * (1 + objective scale).
bool check_determination(const ScenarioSet& set, ExtremePair pair,
                         Criterion mode, double tol = kDefaultTol);

// True iff replacing scenario `id` (not in the pair) with `replacement`
// leaves the certificate intact at the unchanged pair solution.
bool perturbation_envelope(const ScenarioSet& set, const AnalysisOutcome& outcome,
                           int id, const CostFunction& replacement,
                           double tol = kDefaultTol);

// Tests whether all regrets are argument shifts of one shape: regret_i(x) ~=
// shape(x - shift_i), sampled on a common grid spanning the minimizer hull
// padded by one span.  Returns the structure when the max deviation stays
// within tol * (1 + shape scale), nullopt otherwise.
std::optional<ShiftStructure> detect_argument_shift(const ScenarioSet& set,
                                                    const RegretProfile& profile,
                                                    int grid_size = 101,
                                                    double tol = 1e-6);

// Least-worst-regret analysis on a sub-interval, with regret offsets
// recomputed there, against the full-interval analysis.
RestrictionReport restriction_effect(const ScenarioSet& set,
                                     const DecisionInterval& sub,
                                     double tol = kDefaultTol);

}  // namespace lwr
