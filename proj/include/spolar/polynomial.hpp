#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace spolar {

/// Real univariate polynomial in monomial form, coefficients stored lowest
/// degree first. An optional Gegenbauer-basis representation (for a fixed
/// sphere dimension n) can be cached alongside.
class Polynomial {
 public:
  /// Gegenbauer expansion p = sum_i coeffs[i] * P_i^{(n)}.
  struct GegenbauerForm {
    int n = 0;
    std::vector<double> coeffs;
  };

  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> monomial_coeffs);

  static Polynomial constant(double c);
  static Polynomial monomial(int degree, double coeff = 1.0);

  /// Index of the last nonzero coefficient; 0 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double coefficient(int power) const;

  double operator()(double t) const;
  double derivative_at(double t) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double c) { return a *= c; }
  friend Polynomial operator*(double c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  const std::optional<GegenbauerForm>& gegenbauer_form() const { return geg_; }
  void set_gegenbauer_form(GegenbauerForm form) { geg_ = std::move(form); }

 private:
  void trim();
  std::vector<double> coeffs_;  // never empty
  std::optional<GegenbauerForm> geg_;
};

/// Lagrange basic polynomial l_i for the given (distinct) nodes: l_i(x_j) = delta_ij.
Polynomial lagrange_basic(const std::vector<double>& nodes, std::size_t i);

/// l_i evaluated at t without expanding the product.
double lagrange_basic_at(const std::vector<double>& nodes, std::size_t i, double t);

}  // namespace spolar
