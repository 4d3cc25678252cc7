// spolar: universal polarization bounds for spherical codes and designs.
//
// Subcommands: pulb, puub, fl, code-info, polarize, cell600, reproduce-paper.
// JSON (default), CSV node/weight tables, or human-readable output.
// Exit codes: 0 success, 2 precondition violation, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "spolar/bounds.hpp"
#include "spolar/errors.hpp"
#include "spolar/golden.hpp"
#include "spolar/polarization.hpp"

using json = nlohmann::ordered_json;
using namespace spolar;

namespace {

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

json rule_json(const QuadratureRule& rule, int N) {
  json j;
  j["nodes"] = rule.nodes;
  j["weights"] = rule.weights;
  json mult = json::array();
  for (double w : rule.weights) mult.push_back(N * w);
  j["multiplicities"] = mult;
  j["exactness_degree"] = rule.exactness_degree;
  if (rule.s) j["s"] = *rule.s;
  return j;
}

json report_json(const BoundReport& rep) {
  json j;
  j["kind"] = to_string(rep.kind);
  j["value"] = number_or_inf(rep.value);
  j["N"] = rep.N;
  if (rep.rule) {
    const json r = rule_json(*rep.rule, rep.N);
    j["nodes"] = r["nodes"];
    j["weights"] = r["weights"];
    j["multiplicities"] = r["multiplicities"];
    j["exactness_degree"] = r["exactness_degree"];
    if (r.contains("s")) j["s"] = r["s"];
  }
  json diag;
  diag["consistent"] = rep.consistent;
  if (rep.admissibility) {
    diag["admissible"] = rep.admissibility->pass;
    diag["worst_violation"] = number_or_inf(rep.admissibility->worst_violation);
    diag["worst_t"] = rep.admissibility->worst_t;
  }
  if (rep.interpolant) {
    diag["interpolant_degree"] = rep.interpolant->poly.degree();
    diag["interpolant_coefficients"] = rep.interpolant->poly.coefficients();
  }
  if (rep.attainment) {
    diag["attained"] = rep.attainment->attained;
    diag["integer_multiplicities"] = rep.attainment->integer_multiplicities;
    if (!rep.attainment->witness.empty()) j["witness"] = rep.attainment->witness;
    diag["attainment_note"] = rep.attainment->note;
  }
  j["diagnostics"] = diag;
  return j;
}

void emit(const json& j, const std::string& format, const std::string& csv_nodes_key = "nodes") {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    if (j.contains(csv_nodes_key) && j.contains("weights")) {
      std::cout << "node,weight\n";
      for (std::size_t i = 0; i < j[csv_nodes_key].size(); ++i)
        std::printf("%.17g,%.17g\n", j[csv_nodes_key][i].get<double>(),
                    j["weights"][i].get<double>());
    } else {
      std::cout << "key,value\n";
      for (auto it = j.begin(); it != j.end(); ++it)
        if (it->is_number() || it->is_string())
          std::cout << it.key() << "," << it.value().dump() << "\n";
    }
  } else {  // human
    std::cout << j.dump(2) << "\n";
  }
}

void emit_curve(const std::string& path, const Potential& h, const Interpolant& H, double lo,
                double hi) {
  std::ofstream out(path);
  if (!out) throw precondition_error("cannot write curve file '" + path + "'");
  out << "t,h,interpolant\n";
  out.precision(12);
  for (int i = 0; i <= 1000; ++i) {
    const double t = lo + (hi - lo) * i / 1000.0;
    const double hv = h(t);
    out << t << "," << (std::isinf(hv) ? std::string("inf") : std::to_string(hv)) << "," << H(t)
        << "\n";
  }
}

SphericalCode resolve_code(const std::string& spec) {
  if (spec.find(".csv") != std::string::npos || spec.find('/') != std::string::npos)
    return load_code_csv(spec);
  return builtin_code(spec);
}

}  // namespace

// the effective run configuration, echoed into every JSON report so a run can
// be reproduced from its output alone
static json config_json(const std::string& command, const json& fields, const std::string& format,
                        std::uint64_t seed) {
  json j;
  j["command"] = command;
  for (auto it = fields.begin(); it != fields.end(); ++it) j[it.key()] = it.value();
  j["output"] = format;
  j["seed"] = seed;
  return j;
}

int main(int argc, char** argv) {
  CLI::App app{"universal polarization bounds for spherical codes and designs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--output", format, "output format: json, csv, human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  std::uint64_t seed = 20240901;
  app.add_option("--seed", seed, "RNG seed for the multistart searches");

  int n = 3, tau = 3, N = 8;
  double s_value = 1.0;
  std::string potential_spec = "gauss";
  std::string code_spec;
  std::string curve_path;
  bool negative = false;

  auto* cmd_pulb = app.add_subcommand("pulb", "universal lower polarization bound");
  cmd_pulb->add_option("--n", n, "sphere dimension (S^{n-1})")->required();
  cmd_pulb->add_option("--tau", tau, "design strength")->required();
  cmd_pulb->add_option("--N", N, "cardinality")->required();
  cmd_pulb->add_option("--potential", potential_spec, "riesz:m | gauss | log | newton");
  cmd_pulb->add_flag("--negative", negative, "use the nonpositive-derivative variant");
  cmd_pulb->add_option("--emit-curve", curve_path, "write t,h,interpolant samples to FILE");

  auto* cmd_puub = app.add_subcommand("puub", "universal upper polarization bound");
  cmd_puub->add_option("--n", n, "sphere dimension")->required();
  cmd_puub->add_option("--tau", tau, "design strength")->required();
  cmd_puub->add_option("--N", N, "cardinality")->required();
  cmd_puub->add_option("--s", s_value, "covering parameter in (threshold, 1]")->required();
  cmd_puub->add_option("--potential", potential_spec, "riesz:m | gauss | log | newton");
  cmd_puub->add_option("--emit-curve", curve_path, "write t,h,interpolant samples to FILE");

  auto* cmd_fl = app.add_subcommand("fl", "Fazekas-Levenshtein covering bound");
  cmd_fl->add_option("--n", n, "sphere dimension")->required();
  cmd_fl->add_option("--tau", tau, "design strength")->required();

  auto* cmd_info = app.add_subcommand("code-info", "moments, strength, covering data of a code");
  cmd_info->add_option("--code", code_spec, "builtin name or CSV path")->required();
  int maxdeg = 20;
  cmd_info->add_option("--maxdeg", maxdeg, "highest moment degree (<= 24)");

  auto* cmd_pol = app.add_subcommand("polarize", "numerical extrema of the discrete potential");
  cmd_pol->add_option("--code", code_spec, "builtin name or CSV path")->required();
  cmd_pol->add_option("--potential", potential_spec, "riesz:m | gauss | log | newton");

  auto* cmd_600 = app.add_subcommand("cell600", "600-cell min-max certificate");
  cmd_600->add_option("--potential", potential_spec, "potential, absolutely monotone of order 16");
  cmd_600->add_option("--emit-curve", curve_path, "write t,h,interpolant samples to FILE");

  auto* cmd_repro = app.add_subcommand("reproduce-paper", "reference-value reproduction table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_pulb->parsed()) {
      const Potential h = parse_potential(potential_spec);
      const BoundReport rep = negative ? pulb_negative(n, tau, N, h) : pulb(n, tau, N, h);
      if (!curve_path.empty()) emit_curve(curve_path, h, *rep.interpolant, -1.0, 1.0);
      json j = report_json(rep);
      j["config"] = config_json("pulb",
                                {{"n", n}, {"tau", tau}, {"N", N}, {"potential", potential_spec},
                                 {"negative", negative}},
                                format, seed);
      emit(j, format);
    } else if (cmd_puub->parsed()) {
      const Potential h = parse_potential(potential_spec);
      const BoundReport rep = puub(n, tau, N, s_value, h);
      if (!curve_path.empty()) emit_curve(curve_path, h, *rep.interpolant, -1.0, s_value);
      json j = report_json(rep);
      j["config"] = config_json(
          "puub", {{"n", n}, {"tau", tau}, {"N", N}, {"s", s_value}, {"potential", potential_spec}},
          format, seed);
      emit(j, format);
    } else if (cmd_fl->parsed()) {
      json j;
      j["kind"] = "FL";
      j["value"] = fl_bound(n, tau);
      j["config"] = config_json("fl", {{"n", n}, {"tau", tau}}, format, seed);
      emit(j, format);
    } else if (cmd_info->parsed()) {
      const SphericalCode code = resolve_code(code_spec);
      const DesignProfile profile = moments(code, maxdeg);
      const CoveringResult cov = s_of_code(code, seed);
      json j;
      j["kind"] = "code-info";
      j["name"] = code.name();
      j["n"] = code.n();
      j["N"] = code.size();
      j["strength"] = profile.strength;
      j["moments"] = profile.moments;
      j["index_set"] = profile.index_set;
      j["moment_tolerance"] = profile.tolerance;
      j["dgs_bound"] = dgs_bound(code.n(), std::max(profile.strength, 1));
      j["s_of_code"] = cov.value;  // heuristic search, tolerance 1e-6
      j["witness"] = cov.witness;
      j["centroid"] = centroid(code);
      j["config"] = config_json("code-info", {{"code", code_spec}, {"maxdeg", maxdeg}}, format, seed);
      emit(j, format, "moments");
    } else if (cmd_pol->parsed()) {
      const SphericalCode code = resolve_code(code_spec);
      const Potential h = parse_potential(potential_spec);
      const ExtremumResult lo = minimize_potential(code, h, seed);
      json j;
      j["kind"] = "polarize";
      j["code"] = code.name();
      j["potential"] = h.name();
      j["min"] = {{"value", number_or_inf(lo.value)},
                  {"witness", lo.witness},
                  {"gradient_norm", lo.gradient_norm},
                  {"starts_used", lo.starts_used}};
      if (h.continuous_at_one()) {
        const ExtremumResult hi = maximize_potential(code, h, seed);
        j["max"] = {{"value", number_or_inf(hi.value)},
                    {"witness", hi.witness},
                    {"gradient_norm", hi.gradient_norm},
                    {"starts_used", hi.starts_used}};
      } else {
        j["max"] = {{"value", "inf"}};  // singular potentials peak at the code points
      }
      j["diagnostics"] = {{"certified", false},
                          {"note", "extrema are numerical; bound values are certified modulo "
                                   "floating point"}};
      j["config"] =
          config_json("polarize", {{"code", code_spec}, {"potential", potential_spec}}, format, seed);
      emit(j, format);
    } else if (cmd_600->parsed()) {
      const Potential h = parse_potential(potential_spec);
      const Cell600Result res = cell600_bound(h);
      if (!curve_path.empty()) emit_curve(curve_path, h, res.diag.g, -1.0, 1.0);
      json j = report_json(res.report);
      j["nodes"] = cell600_inner_products();
      j["multiplicities"] = cell600_multiplicities();
      j["diagnostics"]["p12_partial_coefficients"] = res.diag.partial_coefficients;
      j["diagnostics"]["p12_of_g"] = res.diag.g_coefficient_12;
      j["diagnostics"]["correction_factor"] = res.diag.correction_factor;
      j["diagnostics"]["h0_times_n"] = res.diag.h0_times_n;
      j["diagnostics"]["min_surplus"] = res.diag.min_surplus;
      j["diagnostics"]["p12_residual"] = res.diag.p12_residual;
      j["config"] = config_json("cell600", {{"potential", potential_spec}}, format, seed);
      emit(j, format);
    } else if (cmd_repro->parsed()) {
      const auto entries = run_golden_suite(seed);
      if (format == "json") {
        json arr = json::array();
        bool all = true;
        for (const auto& e : entries) {
          all = all && e.pass;
          arr.push_back({{"name", e.name},
                         {"expected", e.expected},
                         {"computed", e.computed},
                         {"tolerance", e.tolerance},
                         {"pass", e.pass},
                         {"note", e.note}});
        }
        emit(json{{"kind", "reproduce-paper"}, {"pass", all}, {"values", arr}}, format);
        return all ? 0 : 1;
      }
      return print_golden_table(entries) ? 0 : 1;
    }
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
