#include "spolar/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spolar/errors.hpp"

namespace spolar {

namespace {

void check_dimension(int n) {
  if (n < 2) throw precondition_error("sphere dimension n must be >= 2, got " + std::to_string(n));
}

void check_degree(int k) {
  if (k < 0) throw precondition_error("polynomial degree must be >= 0");
  if (k > kMaxPolyDegree)
    throw precondition_error("degree " + std::to_string(k) + " exceeds the cap " +
                             std::to_string(kMaxPolyDegree) +
                             " (double precision guarantee would be void)");
}

// Three-term recurrence coefficients for standard Jacobi P_k^{(alpha,beta)}:
// P_k = ((c2 + c3 t) P_{k-1} - c4 P_{k-2}) / c1, k >= 2.
struct RecurrenceStep {
  double c1, c2, c3, c4;
};

RecurrenceStep jacobi_step(int k, double alpha, double beta) {
  const double kk = k;
  const double apb = alpha + beta;
  RecurrenceStep s;
  s.c1 = 2.0 * kk * (kk + apb) * (2.0 * kk + apb - 2.0);
  s.c2 = (2.0 * kk + apb - 1.0) * (alpha * alpha - beta * beta);
  s.c3 = (2.0 * kk + apb - 2.0) * (2.0 * kk + apb - 1.0) * (2.0 * kk + apb);
  s.c4 = 2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) * (2.0 * kk + apb);
  return s;
}

// P_k^{(alpha,beta)}(1) = binom(k+alpha, k).
double jacobi_at_one(int k, double alpha) {
  return std::exp(std::lgamma(k + alpha + 1.0) - std::lgamma(alpha + 1.0) -
                  std::lgamma(k + 1.0));
}

}  // namespace

double gamma_n(int n) {
  check_dimension(n);
  return std::exp(std::lgamma(n / 2.0) - std::lgamma((n - 1) / 2.0)) / std::sqrt(M_PI);
}

double base_moment(int n, int j) {
  check_dimension(n);
  if (j < 0) throw precondition_error("moment order must be >= 0");
  if (j % 2 == 1) return 0.0;
  double mu = 1.0;
  for (int m = 2; m <= j; m += 2) mu *= static_cast<double>(m - 1) / (m + n - 2);
  return mu;
}

JacobiFamily::JacobiFamily(int n, int a, int b) : n_(n), a_(a), b_(b) {
  check_dimension(n);
  if ((a != 0 && a != 1) || (b != 0 && b != 1))
    throw precondition_error("adjacent parameters a, b must be in {0,1}");
  alpha_ = a + (n - 3) / 2.0;
  beta_ = b + (n - 3) / 2.0;
}

double JacobiFamily::value(int k, double t) const {
  check_degree(k);
  if (k == 0) return 1.0;
  double pm1 = 1.0;
  double p = (alpha_ - beta_) / 2.0 + (alpha_ + beta_ + 2.0) / 2.0 * t;
  for (int j = 2; j <= k; ++j) {
    const RecurrenceStep s = jacobi_step(j, alpha_, beta_);
    const double next = ((s.c2 + s.c3 * t) * p - s.c4 * pm1) / s.c1;
    pm1 = p;
    p = next;
  }
  return p / jacobi_at_one(k, alpha_);
}

void JacobiFamily::values(int kmax, double t, std::vector<double>& out) const {
  check_degree(kmax);
  out.assign(static_cast<std::size_t>(kmax) + 1, 0.0);
  out[0] = 1.0;
  if (kmax == 0) return;
  double pm1 = 1.0;
  double p = (alpha_ - beta_) / 2.0 + (alpha_ + beta_ + 2.0) / 2.0 * t;
  double at_one = 1.0;  // P_j(1) built by at_one *= (j+alpha)/j
  at_one *= (1.0 + alpha_);
  out[1] = p / at_one;
  for (int j = 2; j <= kmax; ++j) {
    const RecurrenceStep s = jacobi_step(j, alpha_, beta_);
    const double next = ((s.c2 + s.c3 * t) * p - s.c4 * pm1) / s.c1;
    pm1 = p;
    p = next;
    at_one *= (j + alpha_) / j;
    out[static_cast<std::size_t>(j)] = p / at_one;
  }
}

double JacobiFamily::derivative(int k, double t) const {
  check_degree(k);
  if (k == 0) return 0.0;
  // d/dt P_k^{(alpha,beta)} = (k+alpha+beta+1)/2 * P_{k-1}^{(alpha+1,beta+1)}
  double pm1 = 1.0;
  double p = (alpha_ + 1.0 - beta_ - 1.0) / 2.0 + (alpha_ + beta_ + 4.0) / 2.0 * t;
  if (k - 1 == 0) p = 1.0;
  for (int j = 2; j <= k - 1; ++j) {
    const RecurrenceStep s = jacobi_step(j, alpha_ + 1.0, beta_ + 1.0);
    const double next = ((s.c2 + s.c3 * t) * p - s.c4 * pm1) / s.c1;
    pm1 = p;
    p = next;
  }
  return (k + alpha_ + beta_ + 1.0) / 2.0 * p / jacobi_at_one(k, alpha_);
}

Polynomial JacobiFamily::polynomial(int k) const {
  check_degree(k);
  if (k == 0) return Polynomial::constant(1.0);
  Polynomial pm1 = Polynomial::constant(1.0);
  Polynomial p({(alpha_ - beta_) / 2.0, (alpha_ + beta_ + 2.0) / 2.0});
  for (int j = 2; j <= k; ++j) {
    const RecurrenceStep s = jacobi_step(j, alpha_, beta_);
    Polynomial next = p * Polynomial({s.c2 / s.c1, s.c3 / s.c1}) - pm1 * (s.c4 / s.c1);
    pm1 = p;
    p = next;
  }
  return p * (1.0 / jacobi_at_one(k, alpha_));
}

std::vector<double> JacobiFamily::roots(int k) const {
  check_degree(k);
  if (k == 0) return {};
  const int samples = 16 * k + 32;
  std::vector<double> rs;
  rs.reserve(static_cast<std::size_t>(k));
  double prev_t = -1.0;
  double prev_v = value(k, prev_t);
  for (int i = 1; i <= samples; ++i) {
    // Chebyshev-angle sampling tracks the quasi-uniform root spacing in theta.
    const double t = -std::cos(M_PI * static_cast<double>(i) / samples);
    const double v = value(k, t);
    if (prev_v == 0.0) {
      rs.push_back(prev_t);
    } else if (prev_v * v < 0.0) {
      double lo = prev_t, hi = t, flo = prev_v;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = value(k, mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-12) break;
      }
      double r = 0.5 * (lo + hi);
      for (int it = 0; it < 8; ++it) {
        const double f = value(k, r);
        const double df = derivative(k, r);
        if (df == 0.0) break;
        const double step = f / df;
        r -= step;
        if (r < lo || r > hi) {
          r = 0.5 * (lo + hi);
          break;
        }
        if (std::abs(step) < 1e-16) break;
      }
      rs.push_back(r);
    }
    prev_t = t;
    prev_v = v;
  }
  if (static_cast<int>(rs.size()) != k) {
    std::ostringstream msg;
    msg << "root bracketing found " << rs.size() << " of " << k << " roots for P_" << k << "^{("
        << a_ << "," << b_ << ")}, n=" << n_;
    throw numeric_error(msg.str());
  }
  return rs;
}

double JacobiFamily::largest_root(int k) const {
  auto rs = roots(k);
  if (rs.empty()) throw precondition_error("degree-0 polynomial has no roots");
  return rs.back();
}

double JacobiFamily::norm_squared(int k) const {
  check_degree(k);
  if (k == 0) return 1.0;
  // gamma_n * standard-Jacobi norm over P_k(1)^2, alpha = beta.
  const double lg = std::log(gamma_n(n_)) + (2.0 * alpha_ + 1.0) * std::log(2.0) -
                    std::log(2.0 * k + 2.0 * alpha_ + 1.0) - std::lgamma(k + 2.0 * alpha_ + 1.0) +
                    std::lgamma(k + 1.0) + 2.0 * std::lgamma(alpha_ + 1.0);
  return std::exp(lg);
}

Polynomial gegenbauer(int n, int k) { return JacobiFamily(n, 0, 0).polynomial(k); }

Polynomial adjacent(int n, int a, int b, int k) { return JacobiFamily(n, a, b).polynomial(k); }

std::vector<double> roots(const Polynomial& p) {
  const int deg = p.degree();
  check_degree(deg);
  if (deg == 0) return {};
  double scale = 0.0;
  for (double c : p.coefficients()) scale = std::max(scale, std::abs(c));
  const double residual_tol = 1e-10 * scale;

  const int samples = std::max(1024, 64 * deg);
  std::vector<double> rs;
  double prev_t = -1.0;
  double prev_v = p(prev_t);
  for (int i = 1; i <= samples; ++i) {
    const double t = -std::cos(M_PI * static_cast<double>(i) / samples);
    const double v = p(t);
    if (prev_v == 0.0) {
      if (rs.empty() || rs.back() != prev_t) rs.push_back(prev_t);
    } else if (prev_v * v < 0.0) {
      double lo = prev_t, hi = t, flo = prev_v;
      for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      double r = 0.5 * (lo + hi);
      for (int it = 0; it < 8; ++it) {
        const double f = p(r);
        const double df = p.derivative_at(r);
        if (df == 0.0) break;
        const double step = f / df;
        r -= step;
        if (r < lo - 1e-12 || r > hi + 1e-12) {
          r = 0.5 * (lo + hi);
          break;
        }
        if (std::abs(step) < 1e-16) break;
      }
      rs.push_back(r);
    }
    prev_t = t;
    prev_v = v;
  }
  if (p(1.0) == 0.0) rs.push_back(1.0);

  if (static_cast<int>(rs.size()) != deg) {
    std::ostringstream msg;
    msg << "expected " << deg << " simple roots in [-1,1], found " << rs.size();
    throw numeric_error(msg.str());
  }
  for (double r : rs) {
    if (std::abs(p(r)) > residual_tol) {
      std::ostringstream msg;
      msg << "root polish did not converge: residual " << std::abs(p(r)) << " at t=" << r
          << " exceeds " << residual_tol;
      throw numeric_error(msg.str());
    }
  }
  std::sort(rs.begin(), rs.end());
  return rs;
}

double BaseRule::integrate(const std::function<double(double)>& f) const {
  double acc = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double term = weights[i] * f(nodes[i]) - comp;
    const double next = acc + term;
    comp = (next - acc) - term;
    acc = next;
  }
  return acc;
}

double BaseRule::integrate(const Polynomial& p) const {
  return integrate([&](double t) { return p(t); });
}

BaseRule base_rule(int n, int point_count) {
  check_dimension(n);
  if (point_count < 1) throw precondition_error("quadrature needs at least one point");
  const JacobiFamily fam(n, 0, 0);
  BaseRule rule;
  rule.n = n;
  rule.exactness = 2 * point_count - 1;
  rule.nodes = fam.roots(point_count);
  rule.weights.resize(rule.nodes.size());
  std::vector<double> vals;
  std::vector<double> inv_norm(static_cast<std::size_t>(point_count));
  for (int j = 0; j < point_count; ++j) inv_norm[static_cast<std::size_t>(j)] = 1.0 / fam.norm_squared(j);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    fam.values(point_count - 1, rule.nodes[i], vals);
    double s = 0.0;
    for (int j = 0; j < point_count; ++j)
      s += vals[static_cast<std::size_t>(j)] * vals[static_cast<std::size_t>(j)] * inv_norm[static_cast<std::size_t>(j)];
    rule.weights[i] = 1.0 / s;
  }
  return rule;
}

std::vector<double> gegenbauer_coefficients(const Polynomial& p, int n) {
  check_dimension(n);
  const int deg = p.degree();
  check_degree(deg);
  const JacobiFamily fam(n, 0, 0);
  const BaseRule rule = base_rule(n, deg + 9);
  std::vector<double> num(static_cast<std::size_t>(deg) + 1, 0.0);
  std::vector<double> comp(static_cast<std::size_t>(deg) + 1, 0.0);
  std::vector<double> vals;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double pv = p(rule.nodes[q]) * rule.weights[q];
    fam.values(deg, rule.nodes[q], vals);
    for (int i = 0; i <= deg; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double term = pv * vals[ui] - comp[ui];
      const double next = num[ui] + term;
      comp[ui] = (next - num[ui]) - term;
      num[ui] = next;
    }
  }
  for (int i = 0; i <= deg; ++i)
    num[static_cast<std::size_t>(i)] /= fam.norm_squared(i);
  return num;
}

double gegenbauer_series(int n, const std::vector<double>& coeffs, double t) {
  if (coeffs.empty()) return 0.0;
  const JacobiFamily fam(n, 0, 0);
  std::vector<double> vals;
  fam.values(static_cast<int>(coeffs.size()) - 1, t, vals);
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * vals[i];
  return acc;
}

void split_tau(int tau, int& k, int& eps) {
  if (tau < 1) throw precondition_error("design strength tau must be >= 1, got " + std::to_string(tau));
  eps = (tau % 2 == 0) ? 1 : 0;
  k = (tau + 1 - eps) / 2;
}

double largest_root_fl(int n, int tau) {
  int k = 0, eps = 0;
  split_tau(tau, k, eps);
  return JacobiFamily(n, 0, eps).largest_root(k);
}

}  // namespace spolar
