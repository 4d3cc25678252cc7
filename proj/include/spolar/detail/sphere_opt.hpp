#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spolar/codes.hpp"

namespace spolar::detail {

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
void normalize(Vec& a);
Vec tangent_part(const Vec& g, const Vec& x);

/// Deterministic multistart seed family: code points, antipodes, normalized
/// pair/triple sums (stride-subsampled beyond the caps), plus `random_count`
/// seeded uniform points.
std::vector<Vec> seed_points(const SphericalCode& code, std::uint64_t seed,
                             int random_count = 512, std::size_t pair_cap = 2048,
                             std::size_t triple_cap = 4096);

struct DescentResult {
  Vec x;
  double value = 0.0;
  double gradient_norm = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Projected gradient descent on the unit sphere with Armijo backtracking.
/// f fills the tangent gradient and returns the value.
DescentResult project_descend(const std::function<double(const Vec&, Vec&)>& value_and_grad,
                              Vec x0, double grad_tol = 1e-10, int max_iter = 500);

}  // namespace spolar::detail
