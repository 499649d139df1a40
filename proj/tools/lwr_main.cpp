// Command-line front end: scenario analysis (minimax / least worst regret /
// expected cost), curve export, and the capacity procurement workflow.
//
// Exit codes: 0 success, 2 malformed input, 3 solver failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lwr/bayes.hpp"
#include "lwr/capacity.hpp"
#include "lwr/errors.hpp"
#include "lwr/exp_linear.hpp"
#include "lwr/io.hpp"
#include "lwr/regret.hpp"
#include "lwr/scenario.hpp"
#include "lwr/solve.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lwr::SchemaError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw lwr::SchemaError(origin + ": " + e.what());
  }
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

int run_analyze(const std::string& input_path, const std::string& criterion,
                const std::string& probabilities_path, double tol, bool want_compat) {
  const std::string bytes = read_file(input_path);
  const lwr::ScenarioSet set =
      lwr::parse_scenario_set(parse_json_text(bytes, input_path));
  const lwr::RegretProfile profile = lwr::regret_profile(set, tol);

  lwr::RunReport report;
  report.criterion = criterion;
  for (std::size_t i = 0; i < set.size(); ++i)
    report.scenarios.push_back(
        {set.scenarios[i].name, profile.minimizer[i], profile.minimum[i]});

  if (criterion == "bayes") {
    if (probabilities_path.empty())
      throw lwr::SchemaError("criterion 'bayes' needs --probabilities");
    const lwr::ProbabilityVector p = lwr::parse_probabilities(
        parse_json_text(read_file(probabilities_path), probabilities_path), set.size());
    const lwr::SolveResult r = lwr::solve_bayes(set, p, tol);
    report.solution = r.minimizer;
    report.objective = r.value;
  } else {
    const lwr::AnalysisOutcome out = criterion == "minimax"
                                         ? lwr::solve_minimax(set, tol)
                                         : lwr::solve_lwr(set, tol);
    report.solution = out.solution;
    report.objective = out.objective;
    report.determined = out.determined;
    if (out.extreme_pair) {
      const auto& k = set.scenarios[static_cast<std::size_t>(out.extreme_pair->k)];
      const auto& l = set.scenarios[static_cast<std::size_t>(out.extreme_pair->l)];
      report.extreme_pair = {k.name, l.name};
      if (want_compat && k.id != l.id) {
        try {
          const lwr::ProbabilityVector p =
              lwr::compatible_pair_probability(set, k.id, l.id, out.solution);
          report.compatible_pair = {k.name, l.name, p[static_cast<std::size_t>(k.id)],
                                    p[static_cast<std::size_t>(l.id)]};
        } catch (const lwr::NoSolutionError&) {
          // leave the field null; the pair cannot be weighted at this point
        }
      }
    }
  }
  report.provenance = {lwr::fnv1a_digest(bytes), lwr::kToolVersion, tol,
                       lwr::kActivityTolRel, lwr::kCertificateTolRel};
  std::cout << lwr::to_json(report).dump(2) << "\n";
  return 0;
}

int run_curves(const std::string& input_path, double lo, double hi, int n, double tol) {
  if (!(n >= 2)) throw lwr::SchemaError("--n must be at least 2");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw lwr::SchemaError("need finite --lo < --hi");
  const lwr::ScenarioSet set =
      lwr::parse_scenario_set(parse_json_text(read_file(input_path), input_path));
  const lwr::RegretProfile profile = lwr::regret_profile(set, tol);

  std::string header = "x";
  for (const auto& s : set.scenarios) header += "," + csv_field("cost_" + s.name);
  for (const auto& s : set.scenarios) header += "," + csv_field("regret_" + s.name);
  header += ",max_regret";
  std::cout << header << "\n";

  for (int row = 0; row < n; ++row) {
    const double x = lo + (hi - lo) * row / (n - 1);
    std::string line = fmt("%.9g", x);
    double worst = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      const double cost = lwr::evaluate(set.scenarios[i].cost, x);
      line += "," + fmt("%.9g", cost);
      const double regret = cost - profile.minimum[i];
      if (i == 0 || regret > worst) worst = regret;
    }
    for (std::size_t i = 0; i < set.size(); ++i)
      line += "," + fmt("%.9g", lwr::evaluate(set.scenarios[i].cost, x) - profile.minimum[i]);
    line += "," + fmt("%.9g", worst);
    std::cout << line << "\n";
  }
  return 0;
}

int run_capacity_synth(const lwr::EnsembleConfig& config, const std::string& out_path) {
  const lwr::CapacityStudy study = lwr::synthetic_ensemble(config);
  const std::string text = lwr::to_json(study).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw lwr::SchemaError("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

struct CapacityAnalysis {
  lwr::CapacityStudy study;
  lwr::AnalysisOutcome continuous;
  std::vector<double> points;
  lwr::DiscreteLwrResult discrete;
  double lole_ratio = 0.0;
  std::string digest;
};

CapacityAnalysis analyze_capacity(const std::string& input_path, double tol) {
  CapacityAnalysis a;
  const std::string bytes = read_file(input_path);
  a.study = lwr::parse_capacity_study(parse_json_text(bytes, input_path));
  a.digest = lwr::fnv1a_digest(bytes);
  const lwr::ScenarioSet set = lwr::to_scenario_set(a.study);
  a.continuous = lwr::solve_lwr(set, tol);
  a.points = lwr::discrete_decision_set(a.study);
  a.discrete = lwr::solve_lwr_discrete(a.study, a.points, tol);
  a.lole_ratio = lwr::optimal_lole(a.study);
  return a;
}

json pair_names(const lwr::CapacityStudy& study, const lwr::AnalysisOutcome& out) {
  if (!out.extreme_pair) return nullptr;
  return json::array(
      {study.scenarios[static_cast<std::size_t>(out.extreme_pair->k)].name,
       study.scenarios[static_cast<std::size_t>(out.extreme_pair->l)].name});
}

int run_capacity_analyze(const std::string& input_path, double tol) {
  const CapacityAnalysis a = analyze_capacity(input_path, tol);
  const json j = {
      {"continuous",
       {{"solution_mw", a.continuous.solution},
        {"solution_gw", a.continuous.solution / 1000.0},
        {"worst_regret", a.continuous.objective},
        {"extreme_pair", pair_names(a.study, a.continuous)},
        {"determined", a.continuous.determined}}},
      {"discrete",
       {{"points_mw", a.points},
        {"chosen_mw", a.discrete.chosen},
        {"chosen_gw", a.discrete.chosen / 1000.0},
        {"worst_regret", a.discrete.worst_regret},
        {"gap_mw", a.discrete.gap}}},
      {"lole",
       {{"cost_optimal_hours", a.lole_ratio}, {"standard_hours", a.study.standard}}},
      {"provenance",
       {{"input_digest", a.digest}, {"tool_version", lwr::kToolVersion}, {"tol", tol}}}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_capacity_report(const std::string& input_path, double tol) {
  const CapacityAnalysis a = analyze_capacity(input_path, tol);
  std::cout << "capacity procurement study\n"
            << "  scenarios:            " << a.study.scenarios.size() << "\n"
            << "  voll:                 " << fmt("%g", a.study.voll) << " pounds/MWh\n"
            << "  cone:                 " << fmt("%g", a.study.cone) << " pounds/MW/yr\n"
            << "  reliability standard: " << fmt("%g", a.study.standard) << " h/yr\n"
            << "  cost-optimal shortfall (cone/voll): " << fmt("%.3g", a.lole_ratio)
            << " h/yr\n\n"
            << "  continuous least-worst-regret capacity: "
            << fmt("%.2f", a.continuous.solution / 1000.0) << " GW\n"
            << "  discrete points: " << a.points.size() << " spanning "
            << fmt("%.2f", a.points.front() / 1000.0) << " .. "
            << fmt("%.2f", a.points.back() / 1000.0) << " GW\n"
            << "  chosen discrete capacity: " << fmt("%.2f", a.discrete.chosen / 1000.0)
            << " GW (worst regret " << fmt("%.4g", a.discrete.worst_regret)
            << " pounds, gap " << fmt("%.1f", a.discrete.gap) << " MW)\n";
  if (a.continuous.extreme_pair) {
    std::cout << "  extreme scenario pair: "
              << a.study.scenarios[static_cast<std::size_t>(a.continuous.extreme_pair->k)].name
              << ", "
              << a.study.scenarios[static_cast<std::size_t>(a.continuous.extreme_pair->l)].name
              << "\n"
              << "  determined by the pair: "
              << (a.continuous.determined ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scenario-robust decision analysis over convex cost curves"};
  app.require_subcommand(1);

  std::string input, probabilities, criterion = "lwr", out_path;
  double tol = lwr::kDefaultTol;
  bool want_compat = false;
  double lo = 0.0, hi = 0.0;
  int n = 401;
  lwr::EnsembleConfig config;
  config.n = 19;
  config.standard = 3.0;

  CLI::App* analyze = app.add_subcommand("analyze", "Solve one criterion and print a report");
  analyze->add_option("input", input, "scenario-set JSON file")->required();
  analyze->add_option("--criterion", criterion, "minimax | lwr | bayes")
      ->check(CLI::IsMember({"minimax", "lwr", "bayes"}));
  analyze->add_option("--probabilities", probabilities, "scenario weights JSON file");
  analyze->add_option("--tol", tol, "argument tolerance");
  analyze->add_flag("--compat-pair", want_compat,
                    "include the two-point weights that make the solution Bayes-optimal");

  CLI::App* curves = app.add_subcommand("curves", "Export cost and regret curves as CSV");
  curves->add_option("input", input, "scenario-set JSON file")->required();
  curves->add_option("--lo", lo, "grid start")->required();
  curves->add_option("--hi", hi, "grid end")->required();
  curves->add_option("--n", n, "grid points (default 401)");
  curves->add_option("--tol", tol, "argument tolerance");

  CLI::App* capacity = app.add_subcommand("capacity", "Capacity procurement workflow");
  capacity->require_subcommand(1);
  CLI::App* synth = capacity->add_subcommand("synth", "Generate a synthetic study");
  synth->add_option("--n", config.n, "scenario count");
  synth->add_option("--a-low", config.a_low, "lowest EEU(0), MWh/yr")->required();
  synth->add_option("--a-high", config.a_high, "highest EEU(0), MWh/yr")->required();
  synth->add_option("--rate", config.rate, "decay per MW")->required();
  synth->add_option("--voll", config.voll, "value of lost load, pounds/MWh")->required();
  synth->add_option("--cone", config.cone, "cost of new entry, pounds/MW/yr")->required();
  synth->add_option("--standard", config.standard, "reliability standard, h/yr");
  synth->add_option("--seed", config.seed, "generator seed");
  synth->add_option("--out", out_path, "write here instead of stdout");

  CLI::App* cap_analyze = capacity->add_subcommand("analyze", "Solve a study, print JSON");
  cap_analyze->add_option("input", input, "study JSON file")->required();
  cap_analyze->add_option("--tol", tol, "argument tolerance");

  CLI::App* cap_report = capacity->add_subcommand("report", "Solve a study, print text");
  cap_report->add_option("input", input, "study JSON file")->required();
  cap_report->add_option("--tol", tol, "argument tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(input, criterion, probabilities, tol, want_compat);
    if (*curves) return run_curves(input, lo, hi, n, tol);
    if (*synth) return run_capacity_synth(config, out_path);
    if (*cap_analyze) return run_capacity_analyze(input, tol);
    if (*cap_report) return run_capacity_report(input, tol);
  } catch (const lwr::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const lwr::ConfigError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const lwr::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const lwr::Error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
