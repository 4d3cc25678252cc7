#pragma once

#include <optional>
#include <vector>

#include "spolar/orthopoly.hpp"
#include "spolar/polynomial.hpp"

namespace spolar {

enum class RuleKind { PULB, PULB_NEG, PUUB };

/// Positive quadrature rule for gamma_n (1-t^2)^{(n-3)/2} dt produced by one
/// of the polarization-bound constructions. Weights are positive and sum to 1;
/// the rule is exact for all polynomials of degree <= exactness_degree.
struct QuadratureRule {
  int n = 0;
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive, sum 1
  int exactness_degree = 0;
  RuleKind kind = RuleKind::PULB;
  int epsilon = 0;
  std::optional<double> s;  // PUUB only

  double apply(const std::function<double(double)>& h) const;
};

/// Orthogonal basis for the signed measure
/// d nu^{s,1-eps} = gamma_n (1+t)^{1-eps} (s-t) (1-t^2)^{(n-3)/2} dt,
/// monic, degrees 0..k-1+eps, built by modified Gram-Schmidt.
struct SignedMeasureBasis {
  int n = 0;
  double s = 0.0;
  int epsilon = 0;
  std::vector<Polynomial> polys;

  double inner(const Polynomial& f, const Polynomial& g) const;
};

/// Nodes: roots of (1+t)^eps P_k^{(0,eps)}; weights from the Lagrange basic
/// polynomial integrals; exact on polynomials of degree <= tau = 2k-1+eps.
QuadratureRule pulb_rule(int n, int tau);

/// Negative-derivative variant: eps=0 uses nodes {-1} U roots(P_{k-1}^{(1,1)}) U {+1},
/// eps=1 uses roots(P_k^{(1,0)}) U {+1}.
QuadratureRule pulb_negative_rule(int n, int tau);

/// Positive-definiteness threshold: s must exceed the largest root of
/// P_{k-1+eps}^{(0,1-eps)} for the signed measure to be positive definite up
/// to degree k-2+eps.
double signed_measure_threshold(int n, int tau);

SignedMeasureBasis signed_basis(int n, int tau, double s);

/// Nodes: -1 (only when eps=0), the roots of the top signed-basis polynomial,
/// and s; exact on degree <= 2k-1+eps.
QuadratureRule puub_rule(int n, int tau, double s);

}  // namespace spolar
