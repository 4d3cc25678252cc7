#pragma once

#include <cstdint>

#include "spolar/codes.hpp"
#include "spolar/potentials.hpp"

namespace spolar {

/// U_h(x,C) = sum_{y in C} h(x.y), compensated summation. Returns +inf when h
/// is singular at 1 and x coincides with a code point.
double potential_at(const Vec& x, const SphericalCode& code, const Potential& h);

/// Tangent gradient of U_h at x (full gradient projected onto the tangent space).
Vec potential_gradient(const Vec& x, const SphericalCode& code, const Potential& h);

struct ExtremumResult {
  double value = 0.0;
  Vec witness;
  bool is_max = false;
  int starts_used = 0;
  int converged_starts = 0;
  double gradient_norm = 0.0;
};

/// Multistart projected gradient with Armijo backtracking. Seeds: code points,
/// antipodes, normalized pair/triple sums (deterministically subsampled for
/// large codes), plus 512 seeded uniform points. Numerical, not certified.
ExtremumResult minimize_potential(const SphericalCode& code, const Potential& h,
                                  std::uint64_t seed = 20240901);
ExtremumResult maximize_potential(const SphericalCode& code, const Potential& h,
                                  std::uint64_t seed = 20240901);

/// Max-min optimum N*h(0) for 2 <= N <= n (attained by spherical 1-designs);
/// requires h' > 0 and h'' > 0 declared via sign metadata.
double one_design_optimum(int n, int N, const Potential& h);

}  // namespace spolar
