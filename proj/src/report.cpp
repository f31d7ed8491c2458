#include "hardy/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hardy/minorant.hpp"
#include "hardy/oracle.hpp"

namespace hardy {

namespace {

Report number(double value, const std::string& provenance) {
  return Report{{"value", format_double(value)}, {"provenance", provenance}};
}

Report exact_number(const Rational& value, const std::string& provenance) {
  return Report{{"value", format_double(to_double(value))}, {"exact", to_string(value)}, {"provenance", provenance}};
}

Report header(const std::string& command, const Input& input) {
  Report r;
  r["command"] = command;
  r["input"] = input.path;
  r["digest"] = "fnv1a64:" + input.digest;
  r["kind"] = to_string(input.file.kind);
  r["p"] = to_string(input.file.p);
  r["q"] = to_string(input.file.q);
  return r;
}

Report estimate_json(const ConstantEstimate& e, const std::string& formula) {
  Report out;
  out["value"] = format_double(e.value);
  if (e.exact) out["exact"] = to_string(*e.exact);
  out["kind"] = to_string(e.kind);
  out["provenance"] = formula + ": " + e.notes;
  return out;
}

/// u for the minorant command: the file's u, v, or eta / mu (0 on mu-null points).
std::vector<Rational> density(const ProblemFile& file) {
  if (file.u) return *file.u;
  if (file.v) return *file.v;
  std::vector<Rational> u(file.mu.size(), Rational(0));
  for (std::size_t s = 0; s < u.size(); ++s) {
    if (sgn(file.mu[s]) > 0) u[s] = (*file.eta)[s] / file.mu[s];
  }
  return u;
}

}  // namespace

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemFileError("", "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return Input{parse_problem(text.str()), path, fnv1a_digest(text.str())};
}

Report minorant_report(const Input& input) {
  const ProblemFile& file = input.file;
  const MeasureSpace space = make_space(file);
  const OrderedCore core = make_core(file);
  const ScalarField u = to_field(density(file));
  const ScalarField f = file.f ? to_field(*file.f) : ScalarField(space.size(), Extended(1));
  const MinorantResult result = greatest_minorant(core, space, u);

  Report r = header("minorant", input);
  Report points = Report::array();
  for (std::size_t s = 0; s < space.size(); ++s) {
    points.push_back({{"point", space.labels()[s]},
                      {"rank", core.rank(s)},
                      {"u", to_string(u[s])},
                      {"minorant", to_string(result.minorant[s])}});
  }
  r["points"] = std::move(points);
  Report layers = Report::array();
  for (const auto& value : result.perLayerValue) layers.push_back(to_string(value));
  r["perLayerValue"] = std::move(layers);

  const Extended formula = variational_value(core, space, f, u);
  const Rational lp = lp_variational(core, space, f, u);
  const ScalarField witness = push_mass_witness(core, space, f, u);
  r["variational"] = {{"value", to_string(formula)}, {"provenance", "sum f u_ mu"}};
  r["lp"] = {{"value", to_string(lp)}, {"provenance", "exact simplex over the core-set constraints"}};
  Report g = Report::array();
  for (const auto& x : witness) g.push_back(to_string(x));
  r["witness"] = {{"g", std::move(g)},
                  {"objective", to_string(weighted_sum(space, witness, u))},
                  {"provenance", "greedy mass push onto minimal u"}};
  r["consistent"] = formula == Extended(lp);
  return r;
}

Report constant_report(const Input& input, OuterExponent outer, std::uint64_t seed) {
  const ProblemFile& file = input.file;
  const HardyProblem problem = make_hardy_problem(file);
  Report r = header("constant", input);
  r["seed"] = seed;
  const bool metric = file.kind == ProblemKind::metric;

  ConstantEstimate estimate;
  std::string formula;
  if (file.p == 1) {
    if (metric) {
      estimate = metric_constant_p1(make_metric(file), *file.omega, *file.v, file.q, outer);
      formula = "metric p = 1 constant";
    } else {
      estimate = best_constant_p1(problem, outer);
      formula = "p = 1 constant";
    }
    const EtaDecomposition eta = decompose_eta(problem);
    r["singular"] = eta.infinite;
    Report dropped = Report::array();
    for (auto s : eta.dropped) dropped.push_back(file.points[s]);
    r["droppedPoints"] = std::move(dropped);
    if (file.q < 1) r["outerExponent"] = outer == OuterExponent::homogeneous ? "(1-q)/q" : "1/q";
  } else {
    const auto two = make_two_weight(file);
    if (!two) throw ProblemFileError("omega", "p > 1 requires omega and v (generic or metric file)");
    try {
      estimate = metric ? metric_condition(make_metric(file), *file.omega, *file.v, file.p, file.q)
                        : two_weight_condition(*two);
    } catch (const std::invalid_argument& e) {
      throw ProblemFileError("q", e.what());
    }
    formula = file.p <= file.q ? "condition for p <= q" : "condition for q < p";
  }
  r["estimate"] = estimate_json(estimate, formula);

  Report oracle;
  if (file.p == 1 && file.q >= 1) {
    const ExactNorm norm = exact_norm_p1(problem);
    Report exact = norm.exact ? exact_number(*norm.exact, "exact_norm_p1: max over point masses")
                              : number(norm.value, "exact_norm_p1: max over point masses");
    if (norm.argmax) exact["argmax"] = file.points[*norm.argmax];
    oracle["exactNorm"] = std::move(exact);
  }
  RatioSearchOptions search;
  search.seed = seed;
  const RatioReport found = maximize_ratio(problem, search);
  Report bound = number(found.lowerBound, "maximize_ratio: point masses, two-point supports, coordinate ascent");
  bound["iterations"] = found.iterations;
  bound["converged"] = found.converged;
  bound["seed"] = found.seed;
  oracle["lowerBound"] = std::move(bound);
  r["oracle"] = std::move(oracle);

  if (std::isfinite(estimate.value) && std::isfinite(found.lowerBound) && estimate.value > 0 &&
      found.lowerBound > 0) {
    r["sandwich"] = number(found.lowerBound / estimate.value, "maximize_ratio lower bound / estimate");
  }
  return r;
}

Report reduce_report(const Input& input) {
  HardyProblem problem = make_hardy_problem(input.file);
  problem.p = 1;  // the reduction only involves tau, eta and the core
  const HalfLineReduction red = reduce_to_halfline(problem);
  Report r = header("reduce", input);
  auto atoms = [](const LineMeasure& m) {
    Report out = Report::array();
    for (const auto& a : m.atoms()) out.push_back({{"position", to_string(a.position)}, {"mass", to_string(a.mass)}});
    return out;
  };
  r["lambda"] = atoms(red.lambda);
  r["nu"] = atoms(red.nu);
  Report w = Report::array();
  for (const auto& x : red.w) w.push_back(to_string(x));
  r["w"] = std::move(w);
  return r;
}

Report verify_report(const SuiteOptions& options, const std::vector<std::string>& suites) {
  Report r;
  r["command"] = "verify";
  r["seed"] = options.seed;
  r["count"] = options.count;
  r["size"] = options.size;
  Report list = Report::array();
  bool ok = true;
  for (const auto& name : suites) {
    const SuiteResult result = run_suite(name, options);
    ok = ok && result.ok();
    list.push_back({{"name", result.name},
                    {"passed", result.passed},
                    {"total", result.total},
                    {"status", result.ok() ? "pass" : "fail"},
                    {"failures", result.failures},
                    {"notes", result.notes}});
  }
  r["suites"] = std::move(list);
  r["status"] = ok ? "pass" : "fail";
  return r;
}

namespace {

void flatten(const Report& node, const std::string& path, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    std::string text = node.is_string() ? node.get<std::string>() : node.dump();
    if (text.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      text = quoted + "\"";
    }
    out += path + "," + text + "\n";
  }
}

}  // namespace

std::string to_csv(const Report& report) {
  std::string out = "field,value\n";
  flatten(report, "", out);
  return out;
}

}  // namespace hardy
