#pragma once

#include <string>
#include <vector>

#include "spolar/polynomial.hpp"
#include "spolar/potentials.hpp"

namespace spolar {

/// Strictly ascending interpolation nodes with multiplicities 1 or 2.
/// Total count (with multiplicity) is the interpolant degree + 1.
struct NodeMultiset {
  struct Entry {
    double node;
    int multiplicity;  // 1 or 2
  };
  std::vector<Entry> entries;

  static NodeMultiset simple(const std::vector<double>& nodes);
  int total_count() const;
  /// Node sequence with repetitions, ascending.
  std::vector<double> expanded() const;
};

/// Hermite interpolant in Newton form with generalized divided differences.
struct Interpolant {
  Polynomial poly;
  NodeMultiset nodeset;
  std::vector<double> divided_differences;

  /// Newton-form evaluation (more stable than the monomial form for high degree).
  double operator()(double t) const;
};

/// The unique polynomial of degree <= count-1 matching h at every node and h'
/// at every multiplicity-2 node. Throws precondition_error when h is not
/// finite at a node.
Interpolant hermite(const Potential& h, const NodeMultiset& nodes);

struct AdmissibilityReport {
  bool pass = false;
  bool degree_ok = false;
  double worst_violation = 0.0;  // max(f-h) for lower, max(h-f) for upper; >0 means violated
  double worst_t = 0.0;
  int samples = 0;
};

/// Checks f in L(n,tau,h): deg(f) <= tau and f <= h on [-1,1].
/// Dense Chebyshev sampling plus local refinement near minima of h-f;
/// violations beyond 1e-9 fail.
AdmissibilityReport check_lower_admissible(const Polynomial& f, const Potential& h, int tau);

/// Checks f in A(n,s,tau,h): deg(f) <= tau and f >= h on [-1,s].
AdmissibilityReport check_upper_admissible(const Polynomial& f, const Potential& h, int tau,
                                           double s);

}  // namespace spolar
