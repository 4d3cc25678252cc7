#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace spolar {

enum class DerivSign { nonneg, nonpos, unknown };

/// Potential h : [-1,1) -> R (possibly +inf at t = 1) with closed-form
/// derivatives up to order kMaxDerivOrder and sign metadata for the high
/// derivatives on (-1,1).
class Potential {
 public:
  static constexpr int kMaxDerivOrder = 24;

  /// h(t) = (2-2t)^{-m/2}, m > 0. Singular at t = 1; absolutely monotone.
  static Potential riesz(double m);
  /// h(t) = e^{2(t-1)}. Entire; absolutely monotone.
  static Potential gauss();
  /// h(t) = -log(2-2t)/2. Singular at t = 1; derivatives of order >= 1 nonneg.
  static Potential log_potential();

  /// Wraps user-supplied derivative callables (index = order, order 0 = h).
  /// Runs a finite-difference consistency check across consecutive orders and
  /// throws precondition_error listing the worst point on failure.
  static Potential sampled(std::vector<std::function<double(double)>> derivatives,
                           std::map<int, DerivSign> signs = {},
                           bool continuous_at_one = true,
                           const std::string& name = "sampled");

  double operator()(double t) const { return derivative(0, t); }
  double derivative(int order, double t) const;
  bool continuous_at_one() const { return continuous_at_one_; }
  int max_order() const { return max_order_; }
  DerivSign derivative_sign(int order) const;

  /// True when derivative_sign(j) == nonneg for all j = 0..order.
  bool absolutely_monotone(int order) const;

  const std::string& name() const { return name_; }

 private:
  Potential() = default;
  std::function<double(int, double)> eval_;
  std::function<DerivSign(int)> sign_;
  bool continuous_at_one_ = true;
  int max_order_ = kMaxDerivOrder;
  std::string name_;
};

/// Parses the CLI mini-grammar "name[:param]": riesz:m, gauss, log, newton
/// (alias for riesz:2). Unknown names raise precondition_error listing the
/// builtins.
Potential parse_potential(const std::string& spec);

}  // namespace spolar
