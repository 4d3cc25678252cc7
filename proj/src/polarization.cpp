#include "spolar/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spolar/detail/sphere_opt.hpp"
#include "spolar/errors.hpp"

namespace spolar {

using detail::dot;

double potential_at(const Vec& x, const SphericalCode& code, const Potential& h) {
  double acc = 0.0, comp = 0.0;
  for (const auto& y : code.points()) {
    const double v = h(dot(x, y));
    if (std::isinf(v)) return v;  // singular potential at a code point
    const double term = v - comp;
    const double next = acc + term;
    comp = (next - acc) - term;
    acc = next;
  }
  return acc;
}

Vec potential_gradient(const Vec& x, const SphericalCode& code, const Potential& h) {
  Vec g(x.size(), 0.0);
  for (const auto& y : code.points()) {
    const double w = h.derivative(1, dot(x, y));
    for (std::size_t d = 0; d < g.size(); ++d) g[d] += w * y[d];
  }
  return detail::tangent_part(g, x);
}

namespace {

ExtremumResult extremize(const SphericalCode& code, const Potential& h, std::uint64_t seed,
                         bool maximize) {
  const double sgn = maximize ? -1.0 : 1.0;
  auto fg = [&](const Vec& x, Vec& grad) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double acc = 0.0;
    bool infinite = false;
    for (const auto& y : code.points()) {
      const double t = dot(x, y);
      const double v = h(t);
      if (std::isinf(v)) {
        infinite = true;
        break;
      }
      acc += v;
      const double w = h.derivative(1, t);
      for (std::size_t d = 0; d < grad.size(); ++d) grad[d] += w * y[d];
    }
    if (infinite) return std::numeric_limits<double>::infinity();
    for (double& g : grad) g *= sgn;
    return sgn * acc;
  };

  // the sum-direction families grow fast with N; big codes get a trimmed
  // budget (extrema checks against bounds are one-sided safe either way)
  const bool big = code.size() > 60;
  const auto seeds = detail::seed_points(code, seed, big ? 256 : 512, big ? 768 : 2048,
                                         big ? 768 : 4096);
  ExtremumResult best;
  best.value = std::numeric_limits<double>::infinity();
  best.is_max = maximize;
  best.starts_used = static_cast<int>(seeds.size());
  Vec probe_grad(static_cast<std::size_t>(code.n()));
  for (const auto& s : seeds) {
    if (!std::isfinite(fg(s, probe_grad))) continue;  // singular start, useless for descent
    auto r = detail::project_descend(fg, s, 1e-10, 500);
    if (r.converged) ++best.converged_starts;
    const bool better =
        best.witness.empty() || r.value < best.value - 1e-12 * std::max(1.0, std::abs(best.value));
    const bool tie =
        !best.witness.empty() &&
        std::abs(r.value - best.value) <= 1e-12 * std::max(1.0, std::abs(best.value)) &&
        std::lexicographical_compare(r.x.begin(), r.x.end(), best.witness.begin(),
                                     best.witness.end());
    if (better || tie) {
      best.value = r.value;
      best.witness = std::move(r.x);
      best.gradient_norm = r.gradient_norm;
    }
  }
  if (best.witness.empty()) throw numeric_error("no finite starting point for the extremum search");
  // deterministic final polish of the selected witness
  auto polished = detail::project_descend(fg, best.witness, 1e-12, 200);
  best.witness = std::move(polished.x);
  best.gradient_norm = polished.gradient_norm;
  // re-evaluate with compensated summation at the final witness
  best.value = potential_at(best.witness, code, h);
  return best;
}

}  // namespace

ExtremumResult minimize_potential(const SphericalCode& code, const Potential& h,
                                  std::uint64_t seed) {
  return extremize(code, h, seed, false);
}

ExtremumResult maximize_potential(const SphericalCode& code, const Potential& h,
                                  std::uint64_t seed) {
  return extremize(code, h, seed, true);
}

double one_design_optimum(int n, int N, const Potential& h) {
  if (!(N >= 2 && N <= n))
    throw precondition_error("the 1-design optimum applies for 2 <= N <= n");
  if (h.derivative_sign(1) != DerivSign::nonneg || h.derivative_sign(2) != DerivSign::nonneg)
    throw precondition_error("the 1-design optimum needs h' > 0 and h'' > 0 declared");
  return N * h(0.0);
}

}  // namespace spolar
