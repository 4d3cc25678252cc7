#include "spolar/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "spolar/errors.hpp"

namespace spolar {

namespace {

constexpr double kBoundarySlack = 1e-9;

// rho_i = gamma_n int l_i(t) (1-t^2)^{(n-3)/2} dt for the given nodes, by an
// exactness-guaranteed rule (degree >= 2 * #nodes).
std::vector<double> lagrange_weights(int n, const std::vector<double>& nodes) {
  const BaseRule rule = base_rule(n, static_cast<int>(nodes.size()) + 1);
  std::vector<double> w(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    w[i] = rule.integrate([&](double t) { return lagrange_basic_at(nodes, i, t); });
  return w;
}

void check_rule(const QuadratureRule& rule, const char* what) {
  for (std::size_t i = 0; i < rule.weights.size(); ++i) {
    if (!(rule.weights[i] > 0.0)) {
      std::ostringstream msg;
      msg << what << ": weight " << i << " = " << rule.weights[i] << " is not positive";
      throw numeric_error(msg.str());
    }
  }
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      std::ostringstream msg;
      msg << what << ": nodes not strictly ascending at index " << i;
      throw numeric_error(msg.str());
    }
  }
}

}  // namespace

double QuadratureRule::apply(const std::function<double(double)>& h) const {
  double acc = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double term = weights[i] * h(nodes[i]) - comp;
    const double next = acc + term;
    comp = (next - acc) - term;
    acc = next;
  }
  return acc;
}

QuadratureRule pulb_rule(int n, int tau) {
  if (tau > 20) throw precondition_error("pulb_rule supports tau <= 20");
  int k = 0, eps = 0;
  split_tau(tau, k, eps);
  QuadratureRule rule;
  rule.n = n;
  rule.kind = RuleKind::PULB;
  rule.epsilon = eps;
  rule.exactness_degree = tau;
  if (eps == 0) {
    rule.nodes = JacobiFamily(n, 0, 0).roots(k);
  } else {
    rule.nodes = JacobiFamily(n, 0, 1).roots(k);
    rule.nodes.insert(rule.nodes.begin(), -1.0);
  }
  rule.weights = lagrange_weights(n, rule.nodes);
  check_rule(rule, "pulb_rule");
  return rule;
}

QuadratureRule pulb_negative_rule(int n, int tau) {
  if (tau > 20) throw precondition_error("pulb_negative_rule supports tau <= 20");
  int k = 0, eps = 0;
  split_tau(tau, k, eps);
  QuadratureRule rule;
  rule.n = n;
  rule.kind = RuleKind::PULB_NEG;
  rule.epsilon = eps;
  rule.exactness_degree = tau;
  if (eps == 0) {
    rule.nodes = (k >= 2) ? JacobiFamily(n, 1, 1).roots(k - 1) : std::vector<double>{};
    rule.nodes.insert(rule.nodes.begin(), -1.0);
    rule.nodes.push_back(1.0);
  } else {
    rule.nodes = JacobiFamily(n, 1, 0).roots(k);
    rule.nodes.push_back(1.0);
  }
  rule.weights = lagrange_weights(n, rule.nodes);
  check_rule(rule, "pulb_negative_rule");
  return rule;
}

double signed_measure_threshold(int n, int tau) {
  int k = 0, eps = 0;
  split_tau(tau, k, eps);
  const int deg = k - 1 + eps;
  if (deg == 0) return -1.0;  // degree-0 polynomial: no root, no constraint
  return JacobiFamily(n, 0, 1 - eps).largest_root(deg);
}

double SignedMeasureBasis::inner(const Polynomial& f, const Polynomial& g) const {
  const int deg = f.degree() + g.degree() + 2;
  const BaseRule rule = base_rule(n, deg / 2 + 2);
  const bool with_linear_factor = (epsilon == 0);
  return rule.integrate([&](double t) {
    return f(t) * g(t) * (with_linear_factor ? 1.0 + t : 1.0) * (s - t);
  });
}

SignedMeasureBasis signed_basis(int n, int tau, double s) {
  if (tau > 20) throw precondition_error("signed_basis supports tau <= 20");
  int k = 0, eps = 0;
  split_tau(tau, k, eps);
  const double threshold = signed_measure_threshold(n, tau);
  if (!(s >= threshold + kBoundarySlack))
    throw precondition_error(
        "s = " + std::to_string(s) + " is below the positive-definiteness threshold t_" +
        std::to_string(k - 1 + eps) + "^{0," + std::to_string(1 - eps) + "} = " +
        std::to_string(threshold) + " of the signed measure");
  if (s > 1.0)
    throw precondition_error("s must lie in (threshold, 1], got " + std::to_string(s));

  SignedMeasureBasis basis;
  basis.n = n;
  basis.s = s;
  basis.epsilon = eps;
  const int top = k - 1 + eps;
  std::vector<double> norms;
  for (int j = 0; j <= top; ++j) {
    Polynomial q = Polynomial::monomial(j);
    // modified Gram-Schmidt against the already-built vectors
    for (int i = 0; i < j; ++i) {
      const double coef = basis.inner(q, basis.polys[static_cast<std::size_t>(i)]) /
                          norms[static_cast<std::size_t>(i)];
      q -= basis.polys[static_cast<std::size_t>(i)] * coef;
    }
    const double nq = basis.inner(q, q);
    if (j <= k - 2 + eps && !(nq > 0.0)) {
      std::ostringstream msg;
      msg << "signed measure lost positive definiteness at degree " << j << " (<q_j,q_j> = " << nq
          << "), s = " << s;
      throw numeric_error(msg.str());
    }
    norms.push_back(nq);
    basis.polys.push_back(std::move(q));
  }
  return basis;
}

QuadratureRule puub_rule(int n, int tau, double s) {
  int k = 0, eps = 0;
  split_tau(tau, k, eps);
  const SignedMeasureBasis basis = signed_basis(n, tau, s);
  std::vector<double> interior = roots(basis.polys.back());
  if (!interior.empty() && s <= interior.back() + kBoundarySlack)
    throw precondition_error("degenerate PUUB rule: s = " + std::to_string(s) +
                             " coincides with the largest interior node " +
                             std::to_string(interior.back()));

  QuadratureRule rule;
  rule.n = n;
  rule.kind = RuleKind::PUUB;
  rule.epsilon = eps;
  rule.exactness_degree = tau;
  rule.s = s;
  rule.nodes = std::move(interior);
  if (eps == 0) rule.nodes.insert(rule.nodes.begin(), -1.0);
  rule.nodes.push_back(s);
  rule.weights = lagrange_weights(n, rule.nodes);
  check_rule(rule, "puub_rule");
  return rule;
}

}  // namespace spolar
