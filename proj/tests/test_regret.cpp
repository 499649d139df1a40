#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lwr/errors.hpp"
#include "lwr/regret.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lwr;

namespace {

ScenarioSet make_set(std::vector<CostFunction> costs,
                     DecisionInterval interval = DecisionInterval::whole_line()) {
  ScenarioSet set;
  set.interval = interval;
  int id = 0;
  for (auto& c : costs) {
    set.scenarios.push_back({id, "s" + std::to_string(id), std::move(c)});
    ++id;
  }
  return set;
}

const double kE2 = std::exp(2.0);

// Two unit-lambda scenarios whose least-worst-regret solution has the closed
// form log((e^2 - 1) / 2).
ScenarioSet exp_pair() {
  return make_set({ExpLinear{1.0, 1.0, 1.0}, ExpLinear{kE2, 1.0, 1.0}});
}

const double kExpPairSolution = std::log((kE2 - 1.0) / 2.0);  // 1.1614393615711958

// Equal-curvature quadratics with centers 0, 0.5, 1, 1.5, 2.
ScenarioSet quadratic_fan() {
  std::vector<CostFunction> costs;
  for (int i = 0; i < 5; ++i) costs.push_back(Quadratic{1.0, 0.5 * i, 0.0});
  return make_set(std::move(costs));
}

}  // namespace

TEST_CASE("max_cost") {
  const auto single = make_set({Quadratic{1.0, 2.0, 5.0}});
  CHECK(max_cost(single, 2.0) == 5.0);
  CHECK(max_cost(single, 0.0) == 9.0);

  const auto two = make_set({Quadratic{1.0, 0.0, 1.0}, Quadratic{1.0, 1.0, 2.0}});
  CHECK(max_cost(two, 0.0) == 3.0);

  CHECK(max_cost(exp_pair(), 2.0) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("regret_profile minimizers and minima") {
  const auto set = make_set({ExpLinear{1.0, 1.0, 1.0}, Quadratic{1.0, 2.0, 5.0},
                             ExpLinear{kE2, 1.0, 1.0}});
  const auto profile = regret_profile(set);
  REQUIRE(profile.minimizer.size() == 3);
  CHECK(profile.minimizer[0] == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(profile.minimum[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(profile.minimizer[1] == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(profile.minimum[1] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(profile.minimizer[2] == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(profile.minimum[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("regret_profile respects the interval") {
  auto set = make_set({ExpLinear{1.0, 1.0, 1.0}});
  set.interval = {1.0, 10.0};
  const auto profile = regret_profile(set);
  CHECK(profile.minimizer[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(profile.minimum[0] == doctest::Approx(std::exp(-1.0) + 1.0).epsilon(1e-12));
}

TEST_CASE("regret_profile names an unbounded scenario") {
  const auto set = make_set({Quadratic{1.0, 0.0, 0.0},
                             PiecewiseLinear{{0.0}, {-2.0, -1.0}, 0.0}});
  try {
    regret_profile(set);
    FAIL("expected UnboundedBelowError");
  } catch (const UnboundedBelowError& e) {
    CHECK(std::string(e.what()).find("s1") != std::string::npos);
  }
}

TEST_CASE("worst_regret") {
  const auto single = make_set({Quadratic{1.0, 2.0, 5.0}});
  const auto sp = regret_profile(single);
  CHECK(worst_regret(single, sp, 2.0) == doctest::Approx(0.0).epsilon(1e-12));

  const auto sym = make_set({Quadratic{1.0, 0.0, 0.0}, Quadratic{1.0, 2.0, 0.0}});
  CHECK(worst_regret(sym, regret_profile(sym), 1.0) == doctest::Approx(1.0).epsilon(1e-9));

  SUBCASE("equal regrets at the crossing") {
    const auto set = exp_pair();
    const auto profile = regret_profile(set);
    const double x = kExpPairSolution;
    const double r0 = evaluate(set.scenarios[0].cost, x) - profile.minimum[0];
    const double r1 = evaluate(set.scenarios[1].cost, x) - profile.minimum[1];
    CHECK(r0 == doctest::Approx(r1).epsilon(1e-9));
    CHECK(worst_regret(set, profile, x) ==
          doctest::Approx(0.474474647070527).epsilon(1e-9));
  }

  SUBCASE("profile size mismatch") {
    const auto set = exp_pair();
    RegretProfile wrong;
    wrong.minimizer = {0.0};
    wrong.minimum = {1.0};
    CHECK_THROWS_AS(worst_regret(set, wrong, 0.0), DimensionError);
  }
}

TEST_CASE("solve_minimax on a crossing pair") {
  const auto set = make_set({Quadratic{1.0, 0.0, 0.0}, Quadratic{1.0, 2.0, 1.0}});
  const auto out = solve_minimax(set);
  CHECK(out.criterion == Criterion::Minimax);
  CHECK(out.solution == doctest::Approx(1.25).epsilon(1e-7));
  CHECK(out.objective == doctest::Approx(1.5625).epsilon(1e-9));
  REQUIRE(out.determined);
  REQUIRE(out.extreme_pair.has_value());
  CHECK(out.extreme_pair->k == 0);
  CHECK(out.extreme_pair->l == 1);
  CHECK(out.active == std::vector<int>{0, 1});
}

TEST_CASE("solve_minimax under single-scenario dominance") {
  const auto set = make_set({Quadratic{1.0, 0.0, 10.0}, Quadratic{1.0, 0.0, 0.0}});
  const auto out = solve_minimax(set);
  CHECK(out.solution == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(out.objective == doctest::Approx(10.0).epsilon(1e-9));
  REQUIRE(out.determined);
  CHECK(out.extreme_pair->k == 0);
  CHECK(out.extreme_pair->l == 0);
}

TEST_CASE("solve_minimax on the quadratic fan picks the outer scenarios") {
  const auto out = solve_minimax(quadratic_fan());
  CHECK(out.solution == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(out.objective == doctest::Approx(1.0).epsilon(1e-8));
  REQUIRE(out.determined);
  CHECK(out.extreme_pair->k == 0);
  CHECK(out.extreme_pair->l == 4);
}

TEST_CASE("solve_lwr basics") {
  SUBCASE("single scenario") {
    const auto out = solve_lwr(make_set({Quadratic{1.0, 2.0, 5.0}}));
    CHECK(out.solution == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(out.objective == doctest::Approx(0.0).epsilon(1e-9));
    REQUIRE(out.determined);
    CHECK(out.extreme_pair->k == 0);
    CHECK(out.extreme_pair->l == 0);
  }
  SUBCASE("symmetric pair lands on the midpoint") {
    const auto out =
        solve_lwr(make_set({Quadratic{1.0, 0.0, 0.0}, Quadratic{1.0, 2.0, 7.0}}));
    CHECK(out.solution == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(out.objective == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("middle scenarios do not move the exp-linear solution") {
  const auto extremes = exp_pair();
  const auto full = make_set({ExpLinear{1.0, 1.0, 1.0}, ExpLinear{2.0, 1.0, 1.0},
                              ExpLinear{4.0, 1.0, 1.0}, ExpLinear{kE2, 1.0, 1.0}});
  const auto a = solve_lwr(extremes);
  const auto b = solve_lwr(full);
  CHECK(a.solution == doctest::Approx(kExpPairSolution).epsilon(1e-7));
  CHECK(b.solution == doctest::Approx(kExpPairSolution).epsilon(1e-7));
  REQUIRE(b.determined);
  CHECK(b.extreme_pair->k == 0);
  CHECK(b.extreme_pair->l == 3);
  // Grid cross-check on the worst regret.
  const auto profile = regret_profile(full);
  const auto g = oracle::grid_argmin(
      [&](double x) { return worst_regret(full, profile, x); }, -1.0, 4.0, 1e-5);
  CHECK(std::fabs(g.x - b.solution) <= 2e-5);
}

TEST_CASE("find_extreme_pair case analysis") {
  SUBCASE("crossing") {
    const auto set = make_set({Quadratic{1.0, 0.0, 0.0}, Quadratic{1.0, 2.0, 1.0}});
    std::vector<ConvexFunction1D> fs = {lift(set.scenarios[0].cost),
                                        lift(set.scenarios[1].cost)};
    const auto sel = find_extreme_pair(fs, set.interval, 1.25, {0, 1});
    CHECK(sel.pair.k == 0);
    CHECK(sel.pair.l == 1);
    CHECK(sel.kind == PairCase::Crossing);
  }
  SUBCASE("single scenario carries the solution") {
    std::vector<ConvexFunction1D> fs = {lift(Quadratic{1.0, 0.0, 10.0}),
                                        lift(Quadratic{1.0, 0.0, 0.0})};
    const auto sel =
        find_extreme_pair(fs, DecisionInterval::whole_line(), 0.0, {0});
    CHECK(sel.pair.k == 0);
    CHECK(sel.pair.l == 0);
    CHECK(sel.kind == PairCase::SingleScenario);
  }
  SUBCASE("boundary-pinned scenario") {
    DecisionInterval interval{1.0, std::numeric_limits<double>::infinity()};
    std::vector<ConvexFunction1D> fs = {lift(ExpLinear{1.0, 1.0, 1.0})};
    const auto sel = find_extreme_pair(fs, interval, 1.0, {0});
    CHECK(sel.pair.k == 0);
    CHECK(sel.pair.l == 0);
  }
  SUBCASE("no qualifying pair") {
    std::vector<ConvexFunction1D> fs = {lift(Quadratic{1.0, 0.0, 0.0}),
                                        lift(Quadratic{1.0, 2.0, 1.0})};
    CHECK_THROWS_AS(
        find_extreme_pair(fs, DecisionInterval::whole_line(), 0.0, {0}),
        CertificateError);
  }
  SUBCASE("seven-member family pairs the outer parameters") {
    std::vector<CostFunction> costs;
    for (double b : {0.5, 1.0, 1.7, 2.9, 4.4, 6.0, 9.3})
      costs.push_back(ExpLinear{b, 1.0, 1.0});
    const auto out = solve_lwr(make_set(std::move(costs)));
    REQUIRE(out.determined);
    CHECK(out.extreme_pair->k == 0);
    CHECK(out.extreme_pair->l == 6);
    // Exhaustive check: no other pair's solution reproduces the full one
    // except pairs containing both extremes.
    CHECK(out.solution ==
          doctest::Approx(std::log((9.3 - 0.5) / (std::log(9.3) - std::log(0.5))))
              .epsilon(1e-7));
  }
}

TEST_CASE("check_determination") {
  const auto fan = quadratic_fan();
  CHECK(check_determination(fan, {0, 4}, Criterion::Minimax));
  CHECK(check_determination(fan, {0, 4}, Criterion::Lwr));
  CHECK_FALSE(check_determination(fan, {1, 2}, Criterion::Minimax));
  CHECK_FALSE(check_determination(fan, {1, 2}, Criterion::Lwr));

  const auto pair = exp_pair();
  CHECK(check_determination(pair, {0, 1}, Criterion::Lwr));

  CHECK_THROWS_AS(check_determination(pair, {0, 7}, Criterion::Lwr), DomainError);
}

TEST_CASE("perturbation_envelope") {
  const auto fan = quadratic_fan();
  const auto out = solve_lwr(fan);
  REQUIRE(out.determined);

  SUBCASE("small center move keeps the certificate") {
    CHECK(perturbation_envelope(fan, out, 2, Quadratic{1.0, 1.2, 0.0}));
    // Re-solve oracle: the solution is indeed unchanged.
    auto moved = fan;
    moved.scenarios[2].cost = Quadratic{1.0, 1.2, 0.0};
    CHECK(solve_lwr(moved).solution == doctest::Approx(out.solution).epsilon(1e-7));
  }
  SUBCASE("violating replacement is rejected") {
    CHECK_FALSE(perturbation_envelope(fan, out, 2, Quadratic{100.0, 2.5, 0.0}));
  }
  SUBCASE("copying an extreme scenario is always safe") {
    CHECK(perturbation_envelope(fan, out, 2, fan.scenarios[0].cost));
  }
  SUBCASE("extreme ids are rejected") {
    CHECK_THROWS_AS(perturbation_envelope(fan, out, 0, Quadratic{1.0, 0.0, 0.0}),
                    DomainError);
  }
  SUBCASE("undetermined outcomes are rejected") {
    AnalysisOutcome blank;
    CHECK_THROWS_AS(perturbation_envelope(fan, blank, 2, Quadratic{1.0, 0.0, 0.0}),
                    DomainError);
  }
}

TEST_CASE("detect_argument_shift") {
  SUBCASE("equal-curvature quadratics are exact shifts") {
    const auto set = make_set(
        {Quadratic{1.0, 0.0, 0.0}, Quadratic{1.0, 0.7, 3.0}, Quadratic{1.0, 2.0, 1.0}});
    const auto profile = regret_profile(set);
    const auto shift = detect_argument_shift(set, profile);
    REQUIRE(shift.has_value());
    CHECK(shift->max_deviation <= 1e-9);
    REQUIRE(shift->shifts.size() == 3);
    CHECK(shift->shifts[0] == 0.0);
    CHECK(shift->shifts[1] == doctest::Approx(0.7).epsilon(1e-7));
    CHECK(shift->shifts[2] == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(shift->grid.size() == 101);
  }
  SUBCASE("common-lambda exp-linear regrets are shifts") {
    const auto set = make_set({ExpLinear{1.0, 1.0, 1.0}, ExpLinear{2.0, 1.0, 1.0},
                               ExpLinear{kE2, 1.0, 1.0}});
    const auto shift = detect_argument_shift(set, regret_profile(set));
    REQUIRE(shift.has_value());
    CHECK(shift->shifts[2] == doctest::Approx(2.0).epsilon(1e-6));
  }
  SUBCASE("mixed curvatures are not shifts") {
    const auto set = make_set({Quadratic{1.0, 0.0, 0.0}, Quadratic{4.0, 1.0, 0.0}});
    CHECK_FALSE(detect_argument_shift(set, regret_profile(set)).has_value());
  }
  SUBCASE("shift symmetry puts the solution at the midpoint") {
    const auto set = make_set(
        {Quadratic{2.0, -1.0, 0.0}, Quadratic{2.0, 0.4, 2.0}, Quadratic{2.0, 3.0, 1.0}});
    REQUIRE(detect_argument_shift(set, regret_profile(set)).has_value());
    CHECK(solve_lwr(set).solution == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("restriction_effect") {
  SUBCASE("sub-interval covering every minimizer changes nothing") {
    const auto set = make_set({Quadratic{1.0, 0.0, 0.0}, Quadratic{1.0, 2.0, 0.0}});
    const auto report = restriction_effect(set, {-3.0, 5.0});
    CHECK(report.full_solution == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(report.restricted_solution == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(report.changed_offsets.empty());
  }
  SUBCASE("documented exp-linear instance moves the solution") {
    const auto report = restriction_effect(exp_pair(), {1.5, 5.0});
    CHECK(report.full_solution == doctest::Approx(kExpPairSolution).epsilon(1e-6));
    CHECK(report.restricted_solution ==
          doctest::Approx(1.6101748967818077).epsilon(1e-6));
    REQUIRE(report.changed_offsets.size() == 1);
    CHECK(report.changed_offsets[0] == 0);
    REQUIRE(report.reversal_witness.has_value());
    const auto [xa, xb] = *report.reversal_witness;
    CHECK(xa >= 1.5);
    CHECK(xb <= 5.0);
    CHECK(xa < xb);
  }
  SUBCASE("sub-interval must be strictly inside") {
    const auto set = exp_pair();
    CHECK_THROWS_AS(restriction_effect(set, DecisionInterval::whole_line()), DomainError);
    CHECK_THROWS_AS(restriction_effect(set, {5.0, 1.5}), DomainError);
  }
}

TEST_CASE("adding constants leaves regrets alone but can move the minimax point") {
  // Constant shifts cancel in every regret, so the LWR solution stays put.
  const auto base = make_set(
      {Quadratic{1.0, 0.0, 0.0}, Quadratic{1.5, 1.0, 2.0}, Quadratic{1.0, 2.0, 0.5}});
  const double x_lwr = solve_lwr(base).solution;
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    auto shifted = base;
    for (auto& s : shifted.scenarios) {
      auto q = std::get<Quadratic>(s.cost);
      q.offset += gen::uniform(rng, -10.0, 10.0);
      s.cost = q;
    }
    CHECK(std::fabs(solve_lwr(shifted).solution - x_lwr) <= 1e-7);
  }

  // The minimax point follows the constants instead.
  const auto pair = make_set({Quadratic{1.0, -1.0, 0.0}, Quadratic{1.0, 1.0, 0.0}});
  const double x_minimax = solve_minimax(pair).solution;
  CHECK(x_minimax == doctest::Approx(0.0).epsilon(1e-7));
  auto lifted = pair;
  lifted.scenarios[0].cost = Quadratic{1.0, -1.0, 10.0};
  CHECK(std::fabs(solve_minimax(lifted).solution - x_minimax) > 0.1);
  CHECK(std::fabs(solve_lwr(lifted).solution - solve_lwr(pair).solution) <= 1e-7);
}

TEST_CASE("random instances are determined and subset-consistent") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto set = gen::random_convex_set(rng);
    const auto out = solve_lwr(set);
    REQUIRE(out.determined);
    REQUIRE(out.extreme_pair.has_value());

    const auto profile = regret_profile(set);
    CHECK(out.objective >= -1e-9);
    CHECK(worst_regret(set, profile, out.solution) ==
          doctest::Approx(out.objective).epsilon(1e-6));

    // The pair alone reproduces the solution.
    const auto [k, l] = *out.extreme_pair;
    ScenarioSet pair_set;
    pair_set.interval = set.interval;
    pair_set.scenarios.push_back({0, "k", set.scenarios[static_cast<std::size_t>(k)].cost});
    if (l != k)
      pair_set.scenarios.push_back({1, "l", set.scenarios[static_cast<std::size_t>(l)].cost});
    const auto pair_out = solve_lwr(pair_set);
    CHECK(std::fabs(pair_out.solution - out.solution) <= 1e-6);
  }
}

TEST_CASE("random regrets stay nonnegative") {
  std::mt19937_64 rng(8899);
  for (int trial = 0; trial < 40; ++trial) {
    const auto set = gen::random_convex_set(rng);
    const auto profile = regret_profile(set);
    for (int j = 0; j <= 50; ++j) {
      const double lo = set.interval.bounded_below() ? set.interval.lower : -8.0;
      const double hi = set.interval.bounded_above() ? set.interval.upper : 8.0;
      const double x = lo + (hi - lo) * j / 50.0;
      CHECK(worst_regret(set, profile, x) >= -1e-9);
      for (std::size_t i = 0; i < set.size(); ++i)
        CHECK(evaluate(set.scenarios[i].cost, x) - profile.minimum[i] >= -1e-9);
    }
  }
}
