#include "spolar/codes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spolar/detail/sphere_opt.hpp"
#include "spolar/errors.hpp"
#include "spolar/orthopoly.hpp"

namespace spolar {

using detail::dot;
using detail::norm;

SphericalCode::SphericalCode(int n, std::vector<Vec> points, std::string name)
    : n_(n), points_(std::move(points)), name_(std::move(name)) {
  if (n_ < 1) throw precondition_error("code dimension must be >= 1");
  if (points_.empty()) throw precondition_error("a spherical code needs at least one point");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != n_)
      throw precondition_error("all code points must have dimension n = " + std::to_string(n_));
    if (std::abs(norm(p) - 1.0) > 1e-12)
      throw precondition_error("code point is not on the unit sphere (|norm - 1| > 1e-12)");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      double d2 = 0.0;
      for (int d = 0; d < n_; ++d) {
        const double diff = points_[i][static_cast<std::size_t>(d)] - points_[j][static_cast<std::size_t>(d)];
        d2 += diff * diff;
      }
      if (d2 < 1e-18)
        throw precondition_error("code points " + std::to_string(i) + " and " + std::to_string(j) +
                                 " coincide");
    }
  }
}

SphericalCode simplex(int n) {
  if (n < 1) throw precondition_error("simplex needs n >= 1");
  // recursive construction: pairwise inner products exactly -1/n
  std::vector<Vec> pts;
  if (n == 1) {
    pts = {{1.0}, {-1.0}};
  } else {
    const SphericalCode sub = simplex(n - 1);
    pts.push_back(Vec(static_cast<std::size_t>(n), 0.0));
    pts[0][0] = 1.0;
    const double c = -1.0 / n;
    const double s = std::sqrt(1.0 - 1.0 / (static_cast<double>(n) * n));
    for (const auto& w : sub.points()) {
      Vec v(static_cast<std::size_t>(n), 0.0);
      v[0] = c;
      for (int d = 0; d < n - 1; ++d) v[static_cast<std::size_t>(d) + 1] = s * w[static_cast<std::size_t>(d)];
      pts.push_back(std::move(v));
    }
  }
  for (auto& p : pts) detail::normalize(p);
  return SphericalCode(n, std::move(pts), "simplex:" + std::to_string(n));
}

SphericalCode cross_polytope(int n) {
  if (n < 1) throw precondition_error("cross polytope needs n >= 1");
  std::vector<Vec> pts;
  for (int d = 0; d < n; ++d) {
    Vec plus(static_cast<std::size_t>(n), 0.0), minus(static_cast<std::size_t>(n), 0.0);
    plus[static_cast<std::size_t>(d)] = 1.0;
    minus[static_cast<std::size_t>(d)] = -1.0;
    pts.push_back(std::move(plus));
    pts.push_back(std::move(minus));
  }
  return SphericalCode(n, std::move(pts), "cross:" + std::to_string(n));
}

SphericalCode cube3() {
  const double c = 1.0 / std::sqrt(3.0);
  std::vector<Vec> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back({sx * c, sy * c, sz * c});
  return SphericalCode(3, std::move(pts), "cube3");
}

SphericalCode cell24() {
  const double c = 1.0 / std::sqrt(2.0);
  std::vector<Vec> pts;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          Vec v(4, 0.0);
          v[static_cast<std::size_t>(i)] = si * c;
          v[static_cast<std::size_t>(j)] = sj * c;
          pts.push_back(std::move(v));
        }
      }
    }
  }
  return SphericalCode(4, std::move(pts), "cell24");
}

SphericalCode cell600() {
  std::vector<Vec> pts;
  // 8 unit-axis vertices and 16 half-cube vertices (a 24-cell)
  for (int d = 0; d < 4; ++d) {
    for (int s : {-1, 1}) {
      Vec v(4, 0.0);
      v[static_cast<std::size_t>(d)] = s;
      pts.push_back(std::move(v));
    }
  }
  for (int s0 : {-1, 1})
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1}) pts.push_back({0.5 * s0, 0.5 * s1, 0.5 * s2, 0.5 * s3});
  // 96 snub vertices: even permutations of (phi, 1, 1/phi, 0)/2 with free signs
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const std::array<double, 4> base{phi / 2.0, 0.5, 1.0 / (2.0 * phi), 0.0};
  static constexpr std::array<std::array<int, 4>, 12> kEvenPerms{{{0, 1, 2, 3},
                                                                  {0, 2, 3, 1},
                                                                  {0, 3, 1, 2},
                                                                  {1, 0, 3, 2},
                                                                  {1, 2, 0, 3},
                                                                  {1, 3, 2, 0},
                                                                  {2, 0, 1, 3},
                                                                  {2, 1, 3, 0},
                                                                  {2, 3, 0, 1},
                                                                  {3, 0, 2, 1},
                                                                  {3, 1, 0, 2},
                                                                  {3, 2, 1, 0}}};
  for (const auto& perm : kEvenPerms) {
    for (int s0 : {-1, 1}) {
      for (int s1 : {-1, 1}) {
        for (int s2 : {-1, 1}) {
          const std::array<double, 3> signs{static_cast<double>(s0), static_cast<double>(s1),
                                            static_cast<double>(s2)};
          Vec v(4, 0.0);
          for (int i = 0; i < 4; ++i) {
            const int which = perm[static_cast<std::size_t>(i)];
            double x = base[static_cast<std::size_t>(which)];
            if (which < 3) x *= signs[static_cast<std::size_t>(which)];
            v[static_cast<std::size_t>(i)] = x;
          }
          pts.push_back(std::move(v));
        }
      }
    }
  }
  return SphericalCode(4, std::move(pts), "cell600");
}

std::vector<std::string> builtin_code_names() {
  return {"simplex:n", "cross:n", "cube3", "cell24", "cell600"};
}

SphericalCode builtin_code(const std::string& name) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : name.substr(colon + 1);
  const auto need_n = [&]() {
    if (param.empty())
      throw precondition_error("'" + head + "' needs a dimension, e.g. " + head + ":3");
    try {
      return std::stoi(param);
    } catch (const std::logic_error&) {
      throw precondition_error("cannot parse dimension '" + param + "'");
    }
  };
  if (head == "simplex") return simplex(need_n());
  if (head == "cross" || head == "cross_polytope") return cross_polytope(need_n());
  if (head == "cube3") return cube3();
  if (head == "cell24") return cell24();
  if (head == "cell600") return cell600();
  std::string names;
  for (const auto& s : builtin_code_names()) names += " " + s;
  throw precondition_error("unknown code '" + name + "'; builtins:" + names);
}

SphericalCode load_code_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open code file '" + path + "'");
  std::vector<Vec> pts;
  std::string line;
  int n = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Vec p;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        p.push_back(std::stod(cell));
      } catch (const std::logic_error&) {
        throw precondition_error("malformed CSV at " + path + ":" + std::to_string(lineno));
      }
    }
    if (p.empty()) continue;
    if (n < 0) n = static_cast<int>(p.size());
    if (static_cast<int>(p.size()) != n)
      throw precondition_error("inconsistent column count at " + path + ":" + std::to_string(lineno));
    const double r = norm(p);
    if (std::abs(r - 1.0) > 1e-6)
      throw precondition_error("point at " + path + ":" + std::to_string(lineno) +
                               " is off the unit sphere by more than 1e-6");
    for (double& x : p) x /= r;
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw precondition_error("no points found in '" + path + "'");
  return SphericalCode(n, std::move(pts), path);
}

void save_code_csv(const SphericalCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw precondition_error("cannot write '" + path + "'");
  out << "# " << code.name() << " n=" << code.n() << " N=" << code.size() << "\n";
  out.precision(17);
  for (const auto& p : code.points()) {
    for (std::size_t d = 0; d < p.size(); ++d) out << (d ? "," : "") << p[d];
    out << "\n";
  }
}

DesignProfile moments(const SphericalCode& code, int maxdeg) {
  if (maxdeg < 1 || maxdeg > 24) throw precondition_error("moments supports 1 <= maxdeg <= 24");
  const int N = code.size();
  const JacobiFamily fam(std::max(code.n(), 2), 0, 0);
  DesignProfile profile;
  profile.moments.assign(static_cast<std::size_t>(maxdeg), 0.0);
  std::vector<double> vals;
  // diagonal terms: P_i(1) = 1
  for (auto& m : profile.moments) m = N;
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      const double t = dot(code.point(i), code.point(j));
      fam.values(maxdeg, t, vals);
      for (int d = 1; d <= maxdeg; ++d)
        profile.moments[static_cast<std::size_t>(d) - 1] += 2.0 * vals[static_cast<std::size_t>(d)];
    }
  }
  profile.tolerance = 1e-9 * static_cast<double>(N) * N;
  profile.strength = 0;
  for (int d = 1; d <= maxdeg; ++d) {
    if (std::abs(profile.moment(d)) <= profile.tolerance) {
      profile.index_set.push_back(d);
      if (profile.strength == d - 1) profile.strength = d;
    }
  }
  return profile;
}

InnerProductProfile inner_products(const Vec& x, const SphericalCode& code) {
  if (std::abs(norm(x) - 1.0) > 1e-9)
    throw precondition_error("inner_products expects |x| = 1");
  InnerProductProfile prof;
  prof.values.reserve(static_cast<std::size_t>(code.size()));
  for (const auto& y : code.points()) prof.values.push_back(dot(x, y));
  std::sort(prof.values.begin(), prof.values.end());
  constexpr double kCluster = 1e-9;
  std::size_t i = 0;
  while (i < prof.values.size()) {
    std::size_t j = i + 1;
    double sum = prof.values[i];
    while (j < prof.values.size() && prof.values[j] - prof.values[j - 1] <= kCluster) {
      sum += prof.values[j];
      ++j;
    }
    prof.levels.push_back(sum / static_cast<double>(j - i));
    prof.multiplicities.push_back(static_cast<int>(j - i));
    i = j;
  }
  return prof;
}

long long dgs_bound(int n, int tau) {
  if (n < 2) throw precondition_error("dgs_bound needs n >= 2");
  int k = 0, eps = 0;
  split_tau(tau, k, eps);
  const auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  return binom(n + k - 2 + eps, n - 1) + binom(n + k - 2, n - 1);
}

Vec centroid(const SphericalCode& code) {
  Vec c(static_cast<std::size_t>(code.n()), 0.0);
  for (const auto& p : code.points())
    for (std::size_t d = 0; d < c.size(); ++d) c[d] += p[d];
  for (double& x : c) x /= code.size();
  return c;
}

namespace {

double max_inner(const Vec& x, const SphericalCode& code) {
  double m = -2.0;
  for (const auto& y : code.points()) m = std::max(m, dot(x, y));
  return m;
}

// One smoothed-max descent from x0 with an exact active-set polish.
detail::DescentResult covering_descent(const SphericalCode& code, Vec x0) {
  Vec x = std::move(x0);
  for (const double beta : {64.0, 256.0, 1024.0, 4096.0}) {
    auto fg = [&](const Vec& p, Vec& grad) {
      double m = -2.0;
      for (const auto& y : code.points()) m = std::max(m, dot(p, y));
      double z = 0.0;
      std::fill(grad.begin(), grad.end(), 0.0);
      for (const auto& y : code.points()) {
        const double e = std::exp(beta * (dot(p, y) - m));
        z += e;
        for (std::size_t d = 0; d < grad.size(); ++d) grad[d] += e * y[d];
      }
      for (double& g : grad) g /= z;
      return m + std::log(z) / beta;
    };
    x = detail::project_descend(fg, std::move(x), 1e-9, 150).x;
  }

  detail::DescentResult res;
  res.value = max_inner(x, code);

  // active-cap centroid polish: exact at symmetric optima
  for (double delta : {1e-3, 1e-5, 1e-7}) {
    Vec c(x.size(), 0.0);
    int actives = 0;
    for (const auto& y : code.points()) {
      if (dot(x, y) >= res.value - delta) {
        for (std::size_t d = 0; d < c.size(); ++d) c[d] += y[d];
        ++actives;
      }
    }
    if (actives == 0 || detail::norm(c) < 1e-12) continue;
    detail::normalize(c);
    const double cv = max_inner(c, code);
    if (cv <= res.value) {
      x = c;
      res.value = cv;
    }
  }
  res.x = std::move(x);
  res.converged = true;
  return res;
}

}  // namespace

CoveringResult s_of_code(const SphericalCode& code, std::uint64_t seed) {
  const auto seeds = detail::seed_points(code, seed, 256, 1024, 1024);
  CoveringResult best;
  best.value = 2.0;
  for (const auto& s : seeds) {
    const auto r = covering_descent(code, s);
    const bool better = r.value < best.value - 1e-12;
    const bool tie = std::abs(r.value - best.value) <= 1e-12 &&
                     std::lexicographical_compare(r.x.begin(), r.x.end(), best.witness.begin(),
                                                  best.witness.end());
    if (better || (tie && !best.witness.empty())) {
      best.value = r.value;
      best.witness = r.x;
      best.polished = true;
    }
  }
  best.starts_used = static_cast<int>(seeds.size());
  return best;
}

CenteredResult is_centered(const SphericalCode& code, std::uint64_t seed) {
  if (code.size() != 2 * code.n())
    throw precondition_error("is_centered applies to codes of cardinality 2n");
  // max_y |x.y| is max over the symmetrized code; duplicates removed
  std::vector<Vec> sym = code.points();
  for (const auto& p : code.points()) {
    Vec q(p.size());
    for (std::size_t d = 0; d < p.size(); ++d) q[d] = -p[d];
    bool dup = false;
    for (const auto& r : sym) {
      double d2 = 0.0;
      for (std::size_t d = 0; d < r.size(); ++d) d2 += (r[d] - q[d]) * (r[d] - q[d]);
      if (d2 < 1e-18) {
        dup = true;
        break;
      }
    }
    if (!dup) sym.push_back(std::move(q));
  }
  const SphericalCode symmetric(code.n(), std::move(sym), code.name() + "+antipodes");
  const CoveringResult cov = s_of_code(symmetric, seed);
  CenteredResult res;
  res.max_abs_inner = cov.value;
  res.witness = cov.witness;
  res.centered = cov.value <= 1.0 / std::sqrt(static_cast<double>(code.n())) + 1e-8;
  return res;
}

}  // namespace spolar
