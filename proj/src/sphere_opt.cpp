#include "spolar/detail/sphere_opt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spolar/errors.hpp"

namespace spolar::detail {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

void normalize(Vec& a) {
  const double n = norm(a);
  if (n == 0.0) throw numeric_error("cannot normalize the zero vector");
  for (double& x : a) x /= n;
}

Vec tangent_part(const Vec& g, const Vec& x) {
  const double gx = dot(g, x);
  Vec t(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) t[i] = g[i] - gx * x[i];
  return t;
}

namespace {

void push_normalized(std::vector<Vec>& out, Vec v) {
  const double n = norm(v);
  if (n < 1e-9) return;  // opposite points cancel
  for (double& x : v) x /= n;
  out.push_back(std::move(v));
}

}  // namespace

std::vector<Vec> seed_points(const SphericalCode& code, std::uint64_t seed, int random_count,
                             std::size_t pair_cap, std::size_t triple_cap) {
  const auto& pts = code.points();
  const std::size_t N = pts.size();
  std::vector<Vec> seeds;
  for (const auto& p : pts) seeds.push_back(p);
  for (const auto& p : pts) {
    Vec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
    seeds.push_back(std::move(q));
  }

  const std::size_t pair_total = N * (N - 1) / 2;
  const std::size_t pair_stride = std::max<std::size_t>(1, pair_total / std::max<std::size_t>(pair_cap, 1));
  std::size_t pair_index = 0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j, ++pair_index) {
      if (pair_index % pair_stride != 0) continue;
      Vec v(pts[i].size());
      for (std::size_t d = 0; d < v.size(); ++d) v[d] = pts[i][d] + pts[j][d];
      push_normalized(seeds, std::move(v));
    }
  }

  if (N >= 3) {
    const std::size_t triple_total = N * (N - 1) * (N - 2) / 6;
    const std::size_t triple_stride =
        std::max<std::size_t>(1, triple_total / std::max<std::size_t>(triple_cap, 1));
    std::size_t triple_index = 0;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) {
        for (std::size_t k = j + 1; k < N; ++k, ++triple_index) {
          if (triple_index % triple_stride != 0) continue;
          Vec v(pts[i].size());
          for (std::size_t d = 0; d < v.size(); ++d) v[d] = pts[i][d] + pts[j][d] + pts[k][d];
          push_normalized(seeds, std::move(v));
        }
      }
    }
  }

  // symmetric codes produce many coincident sum directions; drop adjacent
  // duplicates after a lexicographic sort (approximate, perf only)
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end(),
                          [](const Vec& a, const Vec& b) {
                            for (std::size_t i = 0; i < a.size(); ++i)
                              if (std::abs(a[i] - b[i]) > 1e-12) return false;
                            return true;
                          }),
              seeds.end());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  for (int r = 0; r < random_count; ++r) {
    Vec v(static_cast<std::size_t>(code.n()));
    for (double& x : v) x = gaussian(rng);
    push_normalized(seeds, std::move(v));
  }
  return seeds;
}

DescentResult project_descend(const std::function<double(const Vec&, Vec&)>& value_and_grad,
                              Vec x0, double grad_tol, int max_iter) {
  DescentResult res;
  Vec x = std::move(x0);
  Vec grad(x.size());
  double f = value_and_grad(x, grad);
  Vec gt = tangent_part(grad, x);
  double gn = norm(gt);
  double step = 1.0 / std::max(1.0, gn);
  int it = 0;
  for (; it < max_iter && gn > grad_tol && std::isfinite(f); ++it) {
    bool moved = false;
    for (int back = 0; back < 40; ++back) {
      Vec cand(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) cand[i] = x[i] - step * gt[i];
      const double cn = norm(cand);
      if (cn == 0.0) {
        step *= 0.5;
        continue;
      }
      for (double& c : cand) c /= cn;
      Vec cg(x.size());
      const double cf = value_and_grad(cand, cg);
      // Armijo; near roundoff-level flatness any non-increase is accepted so
      // the iteration can still polish the gradient norm down
      if (cf <= f - 1e-4 * step * gn * gn || (cf <= f && step * gn * gn < 1e-12 * std::abs(f))) {
        x = std::move(cand);
        f = cf;
        grad = std::move(cg);
        moved = true;
        break;
      }
      step *= 0.5;
      if (step < 1e-18) break;
    }
    if (!moved) break;
    gt = tangent_part(grad, x);
    gn = norm(gt);
    step = std::min(step * 2.0, 1e6);
  }

  // Value comparisons localize the optimum only to sqrt(eps); the gradient is
  // accurate to full precision, so polish by accepting steps that shrink the
  // gradient norm instead.
  double pstep = 1.0;
  for (int it2 = 0; it2 < 80 && gn > grad_tol && std::isfinite(f); ++it2) {
    bool shrunk = false;
    for (int back = 0; back < 30; ++back) {
      Vec cand(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) cand[i] = x[i] - pstep * gt[i];
      const double cn = norm(cand);
      if (cn > 0.0) {
        for (double& c : cand) c /= cn;
        Vec cg(x.size());
        const double cf = value_and_grad(cand, cg);
        Vec cgt = tangent_part(cg, cand);
        const double cgn = norm(cgt);
        if (std::isfinite(cf) && cgn < gn) {
          x = std::move(cand);
          f = cf;
          gt = std::move(cgt);
          gn = cgn;
          pstep *= 1.5;
          shrunk = true;
          break;
        }
      }
      pstep *= 0.5;
      if (pstep < 1e-18) break;
    }
    if (!shrunk) break;
  }
  res.x = std::move(x);
  res.value = f;
  res.gradient_norm = gn;
  res.converged = gn <= grad_tol;
  res.iterations = it;
  return res;
}

}  // namespace spolar::detail
