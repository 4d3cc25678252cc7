#pragma once

#include <functional>
#include <vector>

#include "spolar/polynomial.hpp"

namespace spolar {

/// Degree cap for polynomial construction in double precision. Everything in
/// the library needs degree <= 16; the cap leaves headroom for experiments.
inline constexpr int kMaxPolyDegree = 40;

/// Normalization constant of the projected sphere measure:
/// gamma_n * int_{-1}^{1} (1-t^2)^{(n-3)/2} dt = 1.
double gamma_n(int n);

/// Moments mu_j = gamma_n int t^j (1-t^2)^{(n-3)/2} dt (zero for odd j).
double base_moment(int n, int j);

/// Adjacent Gegenbauer family P_k^{(a,b)} on S^{n-1}: Jacobi polynomials with
/// alpha = a+(n-3)/2, beta = b+(n-3)/2, normalized so that P_k^{(a,b)}(1) = 1.
/// a = b = 0 gives the Gegenbauer polynomials P_k^{(n)}.
class JacobiFamily {
 public:
  JacobiFamily(int n, int a, int b);

  int n() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  double value(int k, double t) const;
  /// Fills out[0..kmax] with P_0(t)..P_kmax(t) in one recurrence pass.
  void values(int kmax, double t, std::vector<double>& out) const;
  double derivative(int k, double t) const;

  /// Monomial form (normalized at 1).
  Polynomial polynomial(int k) const;

  /// The k simple roots in (-1,1), ascending.
  std::vector<double> roots(int k) const;
  double largest_root(int k) const;

  /// ||P_k||^2 with respect to gamma_n (1-t^2)^{(n-3)/2} dt, for a = b = 0.
  double norm_squared(int k) const;

 private:
  int n_, a_, b_;
  double alpha_, beta_;
};

Polynomial gegenbauer(int n, int k);
Polynomial adjacent(int n, int a, int b, int k);

/// Ascending roots of p, assuming simple real roots in [-1,1] (as produced by
/// gegenbauer/adjacent). Throws numeric_error when the expected count is not found.
std::vector<double> roots(const Polynomial& p);

/// Gauss rule for the measure gamma_n (1-t^2)^{(n-3)/2} dt with point_count
/// nodes; exact for polynomials of degree <= 2*point_count - 1.
struct BaseRule {
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness = 0;

  double integrate(const std::function<double(double)>& f) const;
  double integrate(const Polynomial& p) const;
};

BaseRule base_rule(int n, int point_count);

/// Expansion coefficients of p in the normalized Gegenbauer basis:
/// p = sum_i f_i P_i^{(n)}. f_0 equals the mean value
/// gamma_n int p (1-t^2)^{(n-3)/2} dt.
std::vector<double> gegenbauer_coefficients(const Polynomial& p, int n);

/// Evaluates sum_i coeffs[i] P_i^{(n)}(t).
double gegenbauer_series(int n, const std::vector<double>& coeffs, double t);

/// Largest zero t_k^{0,eps} of P_k^{(0,eps)} with tau = 2k-1+eps
/// (the Fazekas-Levenshtein node).
double largest_root_fl(int n, int tau);

/// Splits tau = 2k-1+eps with k >= 1, eps in {0,1}; rejects tau < 1.
void split_tau(int tau, int& k, int& eps);

}  // namespace spolar
