#include "spolar/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spolar/detail/sphere_opt.hpp"
#include "spolar/errors.hpp"
#include "spolar/polarization.hpp"

namespace spolar {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::PULB: return "PULB";
    case BoundKind::PULB_NEG: return "PULB_NEG";
    case BoundKind::PUUB: return "PUUB";
    case BoundKind::PUUB_S1: return "PUUB_S1";
    case BoundKind::FL: return "FL";
    case BoundKind::CELL600: return "CELL600";
  }
  return "?";
}

double named_s_star(const std::string& family) {
  // certified inputs: published covering upper bounds for the named families
  // and the attained covering values; never computed here
  if (family == "cube3") return 0.691;
  if (family == "cell24") return 0.793867;
  const auto colon = family.find(':');
  if (colon != std::string::npos) {
    const std::string head = family.substr(0, colon);
    const int n = std::stoi(family.substr(colon + 1));
    if (head == "cross" || head == "cross_polytope") return 1.0 / std::sqrt(static_cast<double>(n));
    if (head == "simplex") return 1.0 / n;
  }
  throw precondition_error("no certified s* constant for '" + family +
                           "'; known: cube3, cell24, cross:n, simplex:n");
}

namespace {

void check_bound_preconditions(int tau, int N, long long dgs) {
  if (N < dgs) {
    std::ostringstream msg;
    msg << "N = " << N << " is below the Delsarte-Goethals-Seidel bound D(n," << tau
        << ") = " << dgs << "; no such design exists";
    throw precondition_error(msg.str());
  }
}

// Hermite node multiset for the four bound families: derivative matching at
// the interior (double) nodes, value-only at the boundary (simple) nodes.
NodeMultiset bound_nodeset(const QuadratureRule& rule) {
  NodeMultiset ms;
  const std::size_t last = rule.nodes.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    bool simple = false;
    switch (rule.kind) {
      case RuleKind::PULB:
        simple = (rule.epsilon == 1 && i == 0);
        break;
      case RuleKind::PULB_NEG:
        simple = (rule.epsilon == 0 && i == 0) || i == last;
        break;
      case RuleKind::PUUB:
        simple = (rule.epsilon == 0 && i == 0) || i == last;
        break;
    }
    ms.entries.push_back({rule.nodes[i], simple ? 1 : 2});
  }
  return ms;
}

BoundReport finish_report(BoundReport report, const Potential& h, int tau,
                          std::optional<double> upper_s) {
  const QuadratureRule& rule = *report.rule;
  report.value = report.N * rule.apply([&](double t) { return h(t); });
  Interpolant H = hermite(h, bound_nodeset(rule));
  if (upper_s)
    report.admissibility = check_upper_admissible(H.poly, h, tau, *upper_s);
  else
    report.admissibility = check_lower_admissible(H.poly, h, tau);
  // second route: N * f_0 of the optimal interpolant (exactness identity)
  const double f0 = gegenbauer_coefficients(H.poly, rule.n)[0];
  report.consistent =
      std::abs(report.N * f0 - report.value) <= 1e-10 * std::max(1.0, std::abs(report.value));
  report.interpolant = std::move(H);
  return report;
}

}  // namespace

BoundReport pulb(int n, int tau, int N, const Potential& h) {
  if (h.derivative_sign(tau + 1) != DerivSign::nonneg)
    throw precondition_error("PULB needs h^(tau+1) >= 0 on (-1,1); for nonpositive derivative use "
                             "pulb_negative");
  check_bound_preconditions(tau, N, dgs_bound(n, tau));
  BoundReport report;
  report.kind = BoundKind::PULB;
  report.N = N;
  report.rule = pulb_rule(n, tau);
  return finish_report(std::move(report), h, tau, std::nullopt);
}

BoundReport pulb_negative(int n, int tau, int N, const Potential& h) {
  if (h.derivative_sign(tau + 1) != DerivSign::nonpos)
    throw precondition_error("the negative PULB needs h^(tau+1) <= 0 on (-1,1); for nonnegative "
                             "derivative use pulb");
  check_bound_preconditions(tau, N, dgs_bound(n, tau));
  BoundReport report;
  report.kind = BoundKind::PULB_NEG;
  report.N = N;
  report.rule = pulb_negative_rule(n, tau);
  return finish_report(std::move(report), h, tau, std::nullopt);
}

BoundReport puub(int n, int tau, int N, double s, const Potential& h) {
  if (h.derivative_sign(tau + 1) != DerivSign::nonneg)
    throw precondition_error("PUUB needs h^(2k+eps) >= 0 on (-1,1)");
  if (s >= 1.0 && !h.continuous_at_one())
    throw precondition_error("PUUB at s = 1 needs h finite and continuous at t = 1 (" + h.name() +
                             " is singular there)");
  check_bound_preconditions(tau, N, dgs_bound(n, tau));
  BoundReport report;
  report.kind = (s == 1.0) ? BoundKind::PUUB_S1 : BoundKind::PUUB;
  report.N = N;
  report.rule = puub_rule(n, tau, s);
  return finish_report(std::move(report), h, tau, s);
}

double fl_bound(int n, int tau) { return largest_root_fl(n, tau); }

BoundReport simplex_bound(int n, const Potential& h, DerivSign sign) {
  if (sign == DerivSign::unknown || h.derivative_sign(3) != sign)
    throw precondition_error("simplex_bound: declared order-3 derivative sign does not match h");
  BoundReport report;
  report.N = n + 1;
  if (sign == DerivSign::nonneg) {
    report.kind = BoundKind::PULB;
    report.rule = pulb_rule(n, 2);
    report.value = h(-1.0) + n * h(1.0 / n);
  } else {
    report.kind = BoundKind::PULB_NEG;
    report.rule = pulb_negative_rule(n, 2);
    report.value = h(1.0) + n * h(-1.0 / n);
  }
  const double quad = report.N * report.rule->apply([&](double t) { return h(t); });
  report.consistent = std::abs(quad - report.value) <= 1e-10 * std::max(1.0, std::abs(report.value));
  return report;
}

BoundReport cross_polytope_bound(int n, const Potential& h, DerivSign sign) {
  if (sign == DerivSign::unknown || h.derivative_sign(4) != sign)
    throw precondition_error(
        "cross_polytope_bound: declared order-4 derivative sign does not match h");
  BoundReport report;
  report.N = 2 * n;
  const double rn = std::sqrt(static_cast<double>(n));
  if (sign == DerivSign::nonneg) {
    report.kind = BoundKind::PULB;
    report.rule = pulb_rule(n, 3);
    report.value = n * h(-1.0 / rn) + n * h(1.0 / rn);
  } else {
    report.kind = BoundKind::PULB_NEG;
    report.rule = pulb_negative_rule(n, 3);
    report.value = h(-1.0) + (2.0 * n - 2.0) * h(0.0) + h(1.0);
  }
  const double quad = report.N * report.rule->apply([&](double t) { return h(t); });
  report.consistent = std::abs(quad - report.value) <= 1e-10 * std::max(1.0, std::abs(report.value));
  return report;
}

AttainmentDiagnostics check_attainment(const SphericalCode& code, const BoundReport& report,
                                       std::uint64_t seed) {
  if (!report.rule) throw precondition_error("check_attainment needs a report carrying a rule");
  const QuadratureRule& rule = *report.rule;
  const int N = code.size();
  AttainmentDiagnostics diag;
  diag.multiplicities.resize(rule.weights.size());
  diag.integer_multiplicities = true;
  for (std::size_t i = 0; i < rule.weights.size(); ++i) {
    const double m = N * rule.weights[i];
    diag.multiplicities[i] = m;
    const double rounded = std::round(m);
    if (std::abs(m - rounded) > 1e-6 || rounded < 1.0) diag.integer_multiplicities = false;
  }
  if (!diag.integer_multiplicities) {
    diag.attained = false;
    diag.note = "N*rho_i are not positive integers; the bound cannot be attained";
    return diag;
  }

  // candidate witnesses: coordinate axes, code points, sum directions, extremum witness
  std::vector<Vec> candidates;
  for (int d = 0; d < code.n(); ++d) {
    Vec e(static_cast<std::size_t>(code.n()), 0.0);
    e[static_cast<std::size_t>(d)] = 1.0;
    candidates.push_back(e);
    e[static_cast<std::size_t>(d)] = -1.0;
    candidates.push_back(e);
  }
  const auto seeds = detail::seed_points(code, seed, 64, 512, 512);
  candidates.insert(candidates.end(), seeds.begin(), seeds.end());
  {
    const Potential generic = Potential::gauss();
    const auto ext = (rule.kind == RuleKind::PUUB) ? maximize_potential(code, generic, seed)
                                                   : minimize_potential(code, generic, seed);
    candidates.push_back(ext.witness);
  }

  constexpr double kTol = 1e-8;
  for (const auto& x : candidates) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(N));
    for (const auto& y : code.points()) values.push_back(detail::dot(x, y));
    std::sort(values.begin(), values.end());
    // cluster at tolerance 1e-8 and compare against the rule nodes
    std::vector<double> levels;
    std::vector<int> mult;
    std::size_t i = 0;
    while (i < values.size()) {
      std::size_t j = i + 1;
      double sum = values[i];
      while (j < values.size() && values[j] - values[j - 1] <= kTol) sum += values[j++];
      levels.push_back(sum / static_cast<double>(j - i));
      mult.push_back(static_cast<int>(j - i));
      i = j;
    }
    if (levels.size() != rule.nodes.size()) continue;
    bool match = true;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      if (std::abs(levels[l] - rule.nodes[l]) > kTol ||
          mult[l] != static_cast<int>(std::llround(N * rule.weights[l]))) {
        match = false;
        break;
      }
    }
    if (match) {
      diag.attained = true;
      diag.witness = x;
      diag.note = "witness found with T(x,C) equal to the quadrature nodes";
      return diag;
    }
  }
  diag.attained = false;
  diag.note = "no witness with T(x,C) matching the quadrature nodes was found";
  return diag;
}

}  // namespace spolar
