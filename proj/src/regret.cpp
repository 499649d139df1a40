#include "lwr/regret.hpp"

#include <algorithm>
#include <cmath>

#include "lwr/errors.hpp"

namespace lwr {

ConvexFunction1D lift(const CostFunction& f, double offset) {
  ConvexFunction1D out;
  out.value = [f, offset](double x) { return evaluate(f, x) - offset; };
  out.slope = [f](double x) { return slopes(f, x); };
  return out;
}

double max_cost(const ScenarioSet& set, double x) {
  if (set.scenarios.empty()) throw DomainError("scenario set is empty");
  double m = evaluate(set.scenarios.front().cost, x);
  for (std::size_t i = 1; i < set.scenarios.size(); ++i)
    m = std::max(m, evaluate(set.scenarios[i].cost, x));
  return m;
}

RegretProfile regret_profile(const ScenarioSet& set, double tol) {
  if (set.scenarios.empty()) throw DomainError("scenario set is empty");
  RegretProfile profile;
  profile.minimizer.reserve(set.size());
  profile.minimum.reserve(set.size());
  for (const auto& s : set.scenarios) {
    try {
      const SolveResult r =
          minimize([&s](double x) { return evaluate(s.cost, x); }, set.interval, tol);
      profile.minimizer.push_back(r.minimizer);
      profile.minimum.push_back(r.value);
    } catch (const UnboundedBelowError&) {
      throw UnboundedBelowError("scenario '" + s.name +
                                "' is unbounded below over the decision interval");
    }
  }
  return profile;
}

double worst_regret(const ScenarioSet& set, const RegretProfile& profile, double x) {
  if (profile.minimum.size() != set.size())
    throw DimensionError("profile does not match the scenario count");
  double m = evaluate(set.scenarios.front().cost, x) - profile.minimum.front();
  for (std::size_t i = 1; i < set.scenarios.size(); ++i)
    m = std::max(m, evaluate(set.scenarios[i].cost, x) - profile.minimum[i]);
  return m;
}

namespace {

// Minimizes the pair's pointwise max and checks that no other function
// exceeds it there, within the certificate tolerance.
bool certificate_holds(const std::vector<ConvexFunction1D>& fs,
                       const DecisionInterval& interval, ExtremePair pair,
                       double tol) {
  const auto& fk = fs[static_cast<std::size_t>(pair.k)].value;
  const auto& fl = fs[static_cast<std::size_t>(pair.l)].value;
  Objective1D pair_max = pair.k == pair.l
                             ? fk
                             : Objective1D([&fk, &fl](double x) {
                                 return std::max(fk(x), fl(x));
                               });
  const SolveResult r = minimize(pair_max, interval, tol);
  const double bound = r.value;
  const double slack = kCertificateTolRel * (1.0 + std::fabs(bound));
  for (const auto& f : fs)
    if (f.value(r.minimizer) > bound + slack) return false;
  return true;
}

void require_ids(const std::vector<ConvexFunction1D>& fs, ExtremePair pair) {
  const int n = static_cast<int>(fs.size());
  if (pair.k < 0 || pair.k >= n || pair.l < 0 || pair.l >= n)
    throw DomainError("pair ids out of range");
}

}  // namespace

PairSelection find_extreme_pair(const std::vector<ConvexFunction1D>& fs,
                                const DecisionInterval& interval, double solution,
                                const std::vector<int>& active, double tol) {
  if (active.empty()) throw CertificateError("active set is empty");
  for (int id : active)
    if (id < 0 || id >= static_cast<int>(fs.size()))
      throw DomainError("active id out of range");

  std::vector<SlopePair> sl;
  sl.reserve(active.size());
  double scale = 0.0;
  for (int id : active) {
    sl.push_back(fs[static_cast<std::size_t>(id)].slope(solution));
    scale = std::max({scale, std::fabs(sl.back().left), std::fabs(sl.back().right)});
  }
  const double eps = kActivityTolRel * (1.0 + scale);
  const double boundary = 2.0 * tol + 1e-12 * (1.0 + std::fabs(solution));
  const bool at_lower =
      interval.bounded_below() && solution - interval.lower <= boundary;
  const bool at_upper =
      interval.bounded_above() && interval.upper - solution <= boundary;

  std::vector<std::pair<ExtremePair, PairCase>> candidates;
  auto push = [&candidates](ExtremePair p, PairCase c) {
    for (const auto& [q, _] : candidates)
      if (q.k == p.k && q.l == p.l) return;
    candidates.push_back({p, c});
  };

  // One scenario carries the solution: its subgradient admits zero there,
  // either outright or against the interval boundary it is pinned to.
  for (std::size_t i = 0; i < active.size(); ++i) {
    const auto [left, right] = sl[i];
    const bool zero_inside = left <= eps && right >= -eps;
    if (zero_inside || (at_lower && right >= -eps) || (at_upper && left <= eps))
      push({active[i], active[i]}, PairCase::SingleScenario);
  }
  // A rising scenario paired with a falling one pins the same point; strict
  // slope signs first, then the boundary-tolerant relaxation.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < active.size(); ++i) {
      const bool rising = pass == 0 ? sl[i].right > eps : sl[i].right > 0.0;
      if (!rising) continue;
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (i == j) continue;
        const bool falling = pass == 0 ? sl[j].left < -eps : sl[j].left <= 0.0;
        if (falling) push({active[i], active[j]}, PairCase::Crossing);
      }
    }
  }

  for (const auto& [pair, kind] : candidates)
    if (certificate_holds(fs, interval, pair, tol)) return {pair, kind};
  throw CertificateError("no scenario pair reproduces the solution within tolerance");
}

namespace {

AnalysisOutcome analyze(const std::vector<ConvexFunction1D>& fs,
                        const DecisionInterval& interval, Criterion criterion,
                        double tol) {
  std::vector<Objective1D> objectives;
  objectives.reserve(fs.size());
  for (const auto& f : fs) objectives.push_back(f.value);
  const MaxSolveResult m = minimize_pointwise_max(objectives, interval, tol);

  AnalysisOutcome out;
  out.criterion = criterion;
  out.solution = m.solve.minimizer;
  out.objective = m.solve.value;
  out.active = m.active;
  try {
    const PairSelection sel =
        find_extreme_pair(fs, interval, out.solution, m.active, tol);
    out.extreme_pair = sel.pair;
    out.determined = true;  // selection certifies before returning
  } catch (const CertificateError&) {
    out.extreme_pair = std::nullopt;
    out.determined = false;
  }
  return out;
}

std::vector<ConvexFunction1D> cost_functions(const ScenarioSet& set) {
  std::vector<ConvexFunction1D> fs;
  fs.reserve(set.size());
  for (const auto& s : set.scenarios) fs.push_back(lift(s.cost));
  return fs;
}

std::vector<ConvexFunction1D> regret_functions(const ScenarioSet& set,
                                               const RegretProfile& profile) {
  std::vector<ConvexFunction1D> fs;
  fs.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i)
    fs.push_back(lift(set.scenarios[i].cost, profile.minimum[i]));
  return fs;
}

}  // namespace

AnalysisOutcome solve_minimax(const ScenarioSet& set, double tol) {
  if (set.scenarios.empty()) throw DomainError("scenario set is empty");
  return analyze(cost_functions(set), set.interval, Criterion::Minimax, tol);
}

AnalysisOutcome solve_lwr(const ScenarioSet& set, double tol) {
  if (set.scenarios.empty()) throw DomainError("scenario set is empty");
  const RegretProfile profile = regret_profile(set, tol);
  return analyze(regret_functions(set, profile), set.interval, Criterion::Lwr, tol);
}

bool check_determination(const ScenarioSet& set, ExtremePair pair, Criterion mode,
                         double tol) {
  const std::vector<ConvexFunction1D> fs =
      mode == Criterion::Minimax ? cost_functions(set)
                                 : regret_functions(set, regret_profile(set, tol));
  require_ids(fs, pair);
  return certificate_holds(fs, set.interval, pair, tol);
}

bool perturbation_envelope(const ScenarioSet& set, const AnalysisOutcome& outcome,
                           int id, const CostFunction& replacement, double tol) {
  if (!outcome.determined || !outcome.extreme_pair)
    throw DomainError("outcome carries no verified extreme pair");
  const ExtremePair pair = *outcome.extreme_pair;
  if (id == pair.k || id == pair.l)
    throw DomainError("scenario " + std::to_string(id) + " is part of the extreme pair");
  if (id < 0 || id >= static_cast<int>(set.size()))
    throw DomainError("scenario id out of range");

  ScenarioSet modified = set;
  modified.scenarios[static_cast<std::size_t>(id)].cost = replacement;
  // The pair is untouched, so its own solution is unchanged; the certificate
  // check at that solution is exactly the envelope condition.
  return check_determination(modified, pair, outcome.criterion, tol);
}

std::optional<ShiftStructure> detect_argument_shift(const ScenarioSet& set,
                                                    const RegretProfile& profile,
                                                    int grid_size, double tol) {
  if (grid_size < 2) throw DomainError("grid size must be at least 2");
  if (profile.minimizer.size() != set.size() || profile.minimum.size() != set.size())
    throw DimensionError("profile does not match the scenario count");
  if (set.scenarios.empty()) throw DomainError("scenario set is empty");

  const auto [lo_it, hi_it] =
      std::minmax_element(profile.minimizer.begin(), profile.minimizer.end());
  double span = *hi_it - *lo_it;
  if (!(span > 0.0)) span = 1.0;
  const double lo = *lo_it - span;
  const double hi = *hi_it + span;
  const double step = (hi - lo) / (grid_size - 1);

  ShiftStructure shift;
  shift.grid.resize(static_cast<std::size_t>(grid_size));
  shift.reference.resize(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) {
    const double t = lo + step * j;
    shift.grid[static_cast<std::size_t>(j)] = t;
    shift.reference[static_cast<std::size_t>(j)] =
        evaluate(set.scenarios.front().cost, t) - profile.minimum.front();
  }
  shift.shifts.resize(set.size());
  double scale = 0.0;
  for (double g : shift.reference) scale = std::max(scale, std::fabs(g));

  for (std::size_t i = 0; i < set.size(); ++i) {
    shift.shifts[i] = profile.minimizer[i] - profile.minimizer.front();
    for (int j = 0; j < grid_size; ++j) {
      const double t = shift.grid[static_cast<std::size_t>(j)] + shift.shifts[i];
      const double r = evaluate(set.scenarios[i].cost, t) - profile.minimum[i];
      shift.max_deviation = std::max(
          shift.max_deviation, std::fabs(r - shift.reference[static_cast<std::size_t>(j)]));
    }
  }
  if (shift.max_deviation <= tol * (1.0 + scale)) return shift;
  return std::nullopt;
}

RestrictionReport restriction_effect(const ScenarioSet& set, const DecisionInterval& sub,
                                     double tol) {
  if (!(sub.lower < sub.upper)) throw DomainError("sub-interval is empty");
  if (!(sub.lower >= set.interval.lower && sub.upper <= set.interval.upper) ||
      (sub.lower == set.interval.lower && sub.upper == set.interval.upper))
    throw DomainError("sub-interval must lie strictly inside the full interval");

  const RegretProfile full_profile = regret_profile(set, tol);
  const AnalysisOutcome full = solve_lwr(set, tol);

  ScenarioSet restricted = set;
  restricted.interval = sub;
  const RegretProfile sub_profile = regret_profile(restricted, tol);
  const AnalysisOutcome narrow = solve_lwr(restricted, tol);

  RestrictionReport report;
  report.full_solution = full.solution;
  report.restricted_solution = narrow.solution;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double slack = 1e-9 * (1.0 + std::fabs(full_profile.minimum[i]));
    if (std::fabs(sub_profile.minimum[i] - full_profile.minimum[i]) > slack)
      report.changed_offsets.push_back(static_cast<int>(i));
  }

  // Coarse grid search for two points whose worst-regret ordering flips
  // between the two offset regimes.
  constexpr int kGrid = 101;
  std::vector<double> xs(kGrid), wr_full(kGrid), wr_sub(kGrid);
  double value_scale = 0.0;
  for (int j = 0; j < kGrid; ++j) {
    const double x = sub.lower + (sub.upper - sub.lower) * j / (kGrid - 1);
    xs[static_cast<std::size_t>(j)] = x;
    wr_full[static_cast<std::size_t>(j)] = worst_regret(set, full_profile, x);
    wr_sub[static_cast<std::size_t>(j)] = worst_regret(restricted, sub_profile, x);
    value_scale = std::max({value_scale, std::fabs(wr_full[static_cast<std::size_t>(j)]),
                            std::fabs(wr_sub[static_cast<std::size_t>(j)])});
  }
  const double margin = 1e-9 * (1.0 + value_scale);
  for (int a = 0; a < kGrid && !report.reversal_witness; ++a) {
    for (int b = a + 1; b < kGrid; ++b) {
      const double df = wr_full[static_cast<std::size_t>(a)] - wr_full[static_cast<std::size_t>(b)];
      const double ds = wr_sub[static_cast<std::size_t>(a)] - wr_sub[static_cast<std::size_t>(b)];
      if ((df < -margin && ds > margin) || (df > margin && ds < -margin)) {
        report.reversal_witness = {xs[static_cast<std::size_t>(a)], xs[static_cast<std::size_t>(b)]};
        break;
      }
    }
  }
  return report;
}

}  // namespace lwr
