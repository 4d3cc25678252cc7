#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spolar {

using Vec = std::vector<double>;

/// Finite set of distinct unit vectors in R^n.
class SphericalCode {
 public:
  SphericalCode(int n, std::vector<Vec> points, std::string name = "");

  int n() const { return n_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Vec>& points() const { return points_; }
  const Vec& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::string& name() const { return name_; }

 private:
  int n_;
  std::vector<Vec> points_;
  std::string name_;
};

/// Named configurations with exact-construction coordinates.
/// simplex:n, cross:n (cross_polytope), cube3, cell24, cell600.
SphericalCode builtin_code(const std::string& name);
SphericalCode simplex(int n);
SphericalCode cross_polytope(int n);
SphericalCode cube3();
SphericalCode cell24();
SphericalCode cell600();
std::vector<std::string> builtin_code_names();

/// CSV point set: comma-separated reals, n columns, one point per row,
/// optional '#' header lines. Points within 1e-6 of unit norm are
/// re-normalized; anything farther is rejected.
SphericalCode load_code_csv(const std::string& path);
void save_code_csv(const SphericalCode& code, const std::string& path);

/// Moments M_i = sum_{x,y in C} P_i^{(n)}(x.y), design strength, and the
/// index set I(C) of vanishing moments (relative tolerance 1e-9 * N^2).
struct DesignProfile {
  std::vector<double> moments;  // M_1..M_maxdeg
  int strength = 0;
  std::vector<int> index_set;
  double tolerance = 0.0;

  double moment(int i) const { return moments.at(static_cast<std::size_t>(i) - 1); }
};

DesignProfile moments(const SphericalCode& code, int maxdeg);

/// Sorted inner products x.y clustered into distinct levels (tolerance 1e-9).
struct InnerProductProfile {
  std::vector<double> values;  // sorted multiset
  std::vector<double> levels;
  std::vector<int> multiplicities;
};

InnerProductProfile inner_products(const Vec& x, const SphericalCode& code);

/// s_C = min_x max T(x,C) by multistart smoothed-max descent with an exact
/// active-set polish; heuristic with documented tolerance 1e-6.
struct CoveringResult {
  double value = 0.0;
  Vec witness;
  int starts_used = 0;
  bool polished = false;
};

CoveringResult s_of_code(const SphericalCode& code, std::uint64_t seed = 20240901);

/// Delsarte-Goethals-Seidel bound D(n,tau) on the cardinality of tau-designs.
long long dgs_bound(int n, int tau);

Vec centroid(const SphericalCode& code);

/// A 2n-point code is centered when some witness x has T(x,C) inside
/// [-1/sqrt(n), 1/sqrt(n)] (boundary tolerance 1e-8).
struct CenteredResult {
  bool centered = false;
  Vec witness;
  double max_abs_inner = 0.0;
};

CenteredResult is_centered(const SphericalCode& code, std::uint64_t seed = 20240901);

}  // namespace spolar
