#include "lwr/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

#include "lwr/errors.hpp"

namespace lwr {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key + ": missing field");
  return *it;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path + ": expected a number");
  return j.get<double>();
}

int int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<int>();
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

std::vector<double> numbers_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number_at(j[i], path + "/" + std::to_string(i)));
  return out;
}

double endpoint_at(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "+inf") return std::numeric_limits<double>::infinity();
  }
  throw SchemaError(path + ": expected a number, \"-inf\", or \"+inf\"");
}

json endpoint_to_json(double v) {
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  if (v == std::numeric_limits<double>::infinity()) return "+inf";
  return v;
}

CostFunction parse_cost(const json& j, const std::string& path) {
  const std::string kind = string_at(field(j, "kind", path), path + "/kind");
  if (kind == "exp_linear") {
    return ExpLinear{number_at(field(j, "b", path), path + "/b"),
                     number_at(field(j, "lambda", path), path + "/lambda"),
                     number_at(field(j, "c", path), path + "/c")};
  }
  if (kind == "quadratic") {
    return Quadratic{number_at(field(j, "curvature", path), path + "/curvature"),
                     number_at(field(j, "center", path), path + "/center"),
                     number_at(field(j, "offset", path), path + "/offset")};
  }
  if (kind == "piecewise_linear") {
    return PiecewiseLinear{
        numbers_at(field(j, "breakpoints", path), path + "/breakpoints"),
        numbers_at(field(j, "slopes", path), path + "/slopes"),
        number_at(field(j, "anchor", path), path + "/anchor")};
  }
  if (kind == "tabulated") {
    return TabulatedConvex{numbers_at(field(j, "x", path), path + "/x"),
                           numbers_at(field(j, "y", path), path + "/y")};
  }
  throw SchemaError(path + "/kind: unknown cost kind '" + kind + "'");
}

json cost_to_json(const CostFunction& f) {
  json j;
  std::visit(
      [&j](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExpLinear>) {
          j = {{"kind", "exp_linear"}, {"b", g.b}, {"lambda", g.lambda}, {"c", g.c}};
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          j = {{"kind", "quadratic"},
               {"curvature", g.curvature},
               {"center", g.center},
               {"offset", g.offset}};
        } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          j = {{"kind", "piecewise_linear"},
               {"breakpoints", g.breakpoints},
               {"slopes", g.slopes},
               {"anchor", g.anchor}};
        } else {
          j = {{"kind", "tabulated"}, {"x", g.x}, {"y", g.y}};
        }
      },
      f);
  return j;
}

}  // namespace

ScenarioSet parse_scenario_set(const json& j) {
  ScenarioSet set;
  const json& interval = field(j, "interval", "");
  set.interval.lower = endpoint_at(field(interval, "lower", "/interval"), "/interval/lower");
  set.interval.upper = endpoint_at(field(interval, "upper", "/interval"), "/interval/upper");

  const json& scenarios = field(j, "scenarios", "");
  if (!scenarios.is_array()) throw SchemaError("/scenarios: expected an array");
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const std::string path = "/scenarios/" + std::to_string(i);
    const json& sj = scenarios[i];
    Scenario s;
    s.id = int_at(field(sj, "id", path), path + "/id");
    s.name = string_at(field(sj, "name", path), path + "/name");
    s.cost = parse_cost(field(sj, "cost", path), path + "/cost");
    set.scenarios.push_back(std::move(s));
  }

  const ValidationReport report = validate(set);
  if (!report.ok()) {
    std::string msg = "invalid scenario set:";
    for (const auto& v : report.violations) {
      msg += "\n  ";
      if (v.scenario_id >= 0) msg += "scenario " + std::to_string(v.scenario_id) + ": ";
      msg += v.message;
    }
    throw SchemaError(msg);
  }
  return set;
}

json to_json(const ScenarioSet& set) {
  json scenarios = json::array();
  for (const auto& s : set.scenarios)
    scenarios.push_back({{"id", s.id}, {"name", s.name}, {"cost", cost_to_json(s.cost)}});
  return {{"interval",
           {{"lower", endpoint_to_json(set.interval.lower)},
            {"upper", endpoint_to_json(set.interval.upper)}}},
          {"scenarios", scenarios}};
}

ProbabilityVector parse_probabilities(const json& j, std::size_t n) {
  std::vector<double> p = numbers_at(field(j, "p", ""), "/p");
  if (p.size() != n)
    throw SchemaError("/p: expected " + std::to_string(n) + " entries, got " +
                      std::to_string(p.size()));
  try {
    return ProbabilityVector(std::move(p));
  } catch (const DomainError& e) {
    throw SchemaError(std::string("/p: ") + e.what());
  }
}

CapacityStudy parse_capacity_study(const json& j) {
  CapacityStudy study;
  study.voll = number_at(field(j, "voll", ""), "/voll");
  study.cone = number_at(field(j, "cone", ""), "/cone");
  study.standard = number_at(field(j, "standard", ""), "/standard");
  if (!(study.voll > 0.0)) throw SchemaError("/voll: must be positive");
  if (!(study.cone > 0.0)) throw SchemaError("/cone: must be positive");
  if (!(study.standard > 0.0)) throw SchemaError("/standard: must be positive");

  const json& scenarios = field(j, "scenarios", "");
  if (!scenarios.is_array() || scenarios.empty())
    throw SchemaError("/scenarios: expected a nonempty array");
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const std::string path = "/scenarios/" + std::to_string(i);
    const json& sj = scenarios[i];
    CapacityScenario s;
    s.name = string_at(field(sj, "name", path), path + "/name");
    s.curve.eeu_at_zero = number_at(field(sj, "eeu_at_zero", path), path + "/eeu_at_zero");
    s.curve.rate = number_at(field(sj, "rate", path), path + "/rate");
    if (!(s.curve.eeu_at_zero > 0.0)) throw SchemaError(path + "/eeu_at_zero: must be positive");
    if (!(s.curve.rate > 0.0)) throw SchemaError(path + "/rate: must be positive");
    study.scenarios.push_back(std::move(s));
  }
  return study;
}

json to_json(const CapacityStudy& study) {
  json scenarios = json::array();
  for (const auto& s : study.scenarios)
    scenarios.push_back({{"name", s.name},
                         {"eeu_at_zero", s.curve.eeu_at_zero},
                         {"rate", s.curve.rate}});
  return {{"voll", study.voll},
          {"cone", study.cone},
          {"standard", study.standard},
          {"scenarios", scenarios}};
}

json to_json(const RunReport& report) {
  json scenarios = json::array();
  for (const auto& s : report.scenarios)
    scenarios.push_back(
        {{"name", s.name}, {"minimizer", s.minimizer}, {"offset", s.offset}});

  json pair = nullptr;
  if (report.extreme_pair)
    pair = json::array({report.extreme_pair->first, report.extreme_pair->second});
  json determined = nullptr;
  if (report.determined) determined = *report.determined;
  json compat = nullptr;
  if (report.compatible_pair)
    compat = {{"k", report.compatible_pair->k},
              {"l", report.compatible_pair->l},
              {"p_k", report.compatible_pair->pk},
              {"p_l", report.compatible_pair->pl}};

  return {{"criterion", report.criterion},
          {"solution", report.solution},
          {"objective", report.objective},
          {"extreme_pair", pair},
          {"determined", determined},
          {"scenarios", scenarios},
          {"compatible_pair", compat},
          {"provenance",
           {{"input_digest", report.provenance.input_digest},
            {"tool_version", report.provenance.tool_version},
            {"tolerances",
             {{"tol", report.provenance.tol},
              {"activity_rel", report.provenance.activity_tol_rel},
              {"certificate_rel", report.provenance.certificate_tol_rel}}}}}};
}

RunReport parse_run_report(const json& j) {
  RunReport report;
  report.criterion = string_at(field(j, "criterion", ""), "/criterion");
  report.solution = number_at(field(j, "solution", ""), "/solution");
  report.objective = number_at(field(j, "objective", ""), "/objective");

  const json& pair = field(j, "extreme_pair", "");
  if (!pair.is_null()) {
    if (!pair.is_array() || pair.size() != 2)
      throw SchemaError("/extreme_pair: expected null or a two-name array");
    report.extreme_pair = {string_at(pair[0], "/extreme_pair/0"),
                           string_at(pair[1], "/extreme_pair/1")};
  }
  const json& determined = field(j, "determined", "");
  if (!determined.is_null()) {
    if (!determined.is_boolean()) throw SchemaError("/determined: expected null or a boolean");
    report.determined = determined.get<bool>();
  }
  const json& scenarios = field(j, "scenarios", "");
  if (!scenarios.is_array()) throw SchemaError("/scenarios: expected an array");
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const std::string path = "/scenarios/" + std::to_string(i);
    report.scenarios.push_back(
        {string_at(field(scenarios[i], "name", path), path + "/name"),
         number_at(field(scenarios[i], "minimizer", path), path + "/minimizer"),
         number_at(field(scenarios[i], "offset", path), path + "/offset")});
  }
  const json& compat = field(j, "compatible_pair", "");
  if (!compat.is_null()) {
    report.compatible_pair = {string_at(field(compat, "k", "/compatible_pair"), "/compatible_pair/k"),
                              string_at(field(compat, "l", "/compatible_pair"), "/compatible_pair/l"),
                              number_at(field(compat, "p_k", "/compatible_pair"), "/compatible_pair/p_k"),
                              number_at(field(compat, "p_l", "/compatible_pair"), "/compatible_pair/p_l")};
  }
  const json& prov = field(j, "provenance", "");
  report.provenance.input_digest =
      string_at(field(prov, "input_digest", "/provenance"), "/provenance/input_digest");
  report.provenance.tool_version =
      string_at(field(prov, "tool_version", "/provenance"), "/provenance/tool_version");
  const json& tols = field(prov, "tolerances", "/provenance");
  report.provenance.tol = number_at(field(tols, "tol", "/provenance/tolerances"),
                                    "/provenance/tolerances/tol");
  report.provenance.activity_tol_rel =
      number_at(field(tols, "activity_rel", "/provenance/tolerances"),
                "/provenance/tolerances/activity_rel");
  report.provenance.certificate_tol_rel =
      number_at(field(tols, "certificate_rel", "/provenance/tolerances"),
                "/provenance/tolerances/certificate_rel");
  return report;
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lwr
