#include <cmath>
#include <random>

#include "doctest.h"
#include "spolar/errors.hpp"
#include "spolar/quadrature.hpp"

using namespace spolar;

namespace {

// independent route: integrate a polynomial from its monomial moments
double moment_integral(int n, const Polynomial& p) {
  double s = 0.0;
  for (int j = 0; j <= p.degree(); ++j) s += p.coefficient(j) * base_moment(n, j);
  return s;
}

void check_exactness(const QuadratureRule& rule, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double wsum = 0.0;
  for (double w : rule.weights) {
    CHECK(w > 0.0);
    wsum += w;
  }
  CHECK(std::abs(wsum - 1.0) < 1e-12);
  for (int deg = 0; deg <= rule.exactness_degree; ++deg) {
    std::vector<double> c(static_cast<std::size_t>(deg) + 1);
    for (double& x : c) x = coeff(rng);
    const Polynomial p{c};
    CHECK(std::abs(rule.apply([&](double t) { return p(t); }) - moment_integral(rule.n, p)) <
          1e-10);
  }
  // one degree past the exactness the fixed witness t^{d+1} must miss
  const Polynomial witness = Polynomial::monomial(rule.exactness_degree + 1);
  CHECK(std::abs(rule.apply([&](double t) { return witness(t); }) -
                 moment_integral(rule.n, witness)) > 1e-6);
}

}  // namespace

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("pulb rules from the worked examples") {
  const QuadratureRule r33 = pulb_rule(3, 3);
  REQUIRE(r33.nodes.size() == 2);
  CHECK(r33.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-13));
  CHECK(r33.weights[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(r33.weights[1] == doctest::Approx(0.5).epsilon(1e-13));

  const QuadratureRule r45 = pulb_rule(4, 5);
  REQUIRE(r45.nodes.size() == 3);
  CHECK(r45.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-13));
  CHECK(std::abs(r45.nodes[1]) < 1e-13);
  CHECK(r45.weights[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r45.weights[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r45.weights[2] == doctest::Approx(0.25).epsilon(1e-12));

  for (int n = 3; n <= 6; ++n) {  // simplex rule: nodes (-1, 1/n), weights (1/(n+1), n/(n+1))
    const QuadratureRule r = pulb_rule(n, 2);
    REQUIRE(r.nodes.size() == 2);
    CHECK(r.nodes[0] == doctest::Approx(-1.0));
    CHECK(r.nodes[1] == doctest::Approx(1.0 / n).epsilon(1e-13));
    CHECK(r.weights[0] == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-12));
    CHECK(r.weights[1] == doctest::Approx(n / (n + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("negative-derivative rules") {
  const QuadratureRule r33 = pulb_negative_rule(3, 3);
  REQUIRE(r33.nodes.size() == 3);
  CHECK(r33.nodes[0] == doctest::Approx(-1.0));
  CHECK(std::abs(r33.nodes[1]) < 1e-13);
  CHECK(r33.nodes[2] == doctest::Approx(1.0));
  CHECK(r33.weights[0] == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(r33.weights[1] == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(r33.weights[2] == doctest::Approx(1.0 / 6).epsilon(1e-12));

  const QuadratureRule r45 = pulb_negative_rule(4, 5);
  REQUIRE(r45.nodes.size() == 4);
  CHECK(r45.nodes[1] == doctest::Approx(-1.0 / std::sqrt(6.0)).epsilon(1e-12));
  CHECK(r45.weights[0] == doctest::Approx(1.0 / 20).epsilon(1e-11));
  CHECK(r45.weights[1] == doctest::Approx(9.0 / 20).epsilon(1e-11));

  // derived closed form for tau = 3: weights (1/(2n), (n-1)/n, 1/(2n))
  for (int n = 2; n <= 6; ++n) {
    const QuadratureRule r = pulb_negative_rule(n, 3);
    CHECK(r.weights[0] == doctest::Approx(0.5 / n).epsilon(1e-12));
    CHECK(r.weights[1] == doctest::Approx((n - 1.0) / n).epsilon(1e-12));
    CHECK(r.weights[2] == doctest::Approx(0.5 / n).epsilon(1e-12));
  }
  // tau = 2: nodes (-1/n, 1), weights (n/(n+1), 1/(n+1))
  const QuadratureRule r42 = pulb_negative_rule(4, 2);
  CHECK(r42.nodes[0] == doctest::Approx(-0.25).epsilon(1e-13));
  CHECK(r42.nodes[1] == doctest::Approx(1.0));
  CHECK(r42.weights[0] == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("exactness sweep with witness gap") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 6; ++n) {
    for (int tau = 1; tau <= 9; ++tau) {
      check_exactness(pulb_rule(n, tau), rng);
      check_exactness(pulb_negative_rule(n, tau), rng);
      check_exactness(puub_rule(n, tau, 0.97), rng);
    }
  }
}

TEST_CASE("PULB weights equal the squared-Lagrange integrals") {
  for (int n : {3, 4, 5}) {
    for (int tau : {3, 5, 7, 4, 6}) {
      const QuadratureRule rule = pulb_rule(n, tau);
      const BaseRule base = base_rule(n, static_cast<int>(rule.nodes.size()) + 2);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double sq =
            base.integrate([&](double t) { return std::pow(lagrange_basic_at(rule.nodes, i, t), 2); });
        CHECK(sq > 0.0);
        CHECK(rule.weights[i] == doctest::Approx(sq).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("signed basis matches the worked closed forms") {
  for (double s : {0.75, 0.794, 0.9}) {
    const SignedMeasureBasis basis = signed_basis(4, 5, s);
    REQUIRE(basis.polys.size() == 3);
    const double den = 6.0 * s * s - 2.0 * s - 1.0;
    const Polynomial& q2 = basis.polys[2];
    CHECK(q2.coefficient(2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q2.coefficient(1) == doctest::Approx(2.0 * s * (1.0 - s) / den).epsilon(1e-10));
    CHECK(q2.coefficient(0) ==
          doctest::Approx(-(2.0 * s * s - 1.0) / (2.0 * den)).epsilon(1e-10));
    // pairwise orthogonality and positive norms below the top degree
    const double d00 = basis.inner(basis.polys[0], basis.polys[0]);
    const double d11 = basis.inner(basis.polys[1], basis.polys[1]);
    CHECK(d00 > 0.0);
    CHECK(d11 > 0.0);
    CHECK(std::abs(basis.inner(basis.polys[0], basis.polys[1])) < 1e-10 * std::max(d00, d11));
    CHECK(std::abs(basis.inner(basis.polys[1], basis.polys[2])) < 1e-10 * std::max(d00, d11));
  }

  const SignedMeasureBasis b33 = signed_basis(3, 3, 0.691);
  REQUIRE(b33.polys.size() == 2);
  CHECK(b33.polys[1].coefficient(0) ==
        doctest::Approx((1.0 - 0.691) / (3.0 * 0.691 - 1.0)).epsilon(1e-11));

  CHECK_THROWS_AS((void)signed_basis(3, 3, 0.30), precondition_error);   // below t_1^{0,1} = 1/3
  CHECK_THROWS_AS((void)signed_basis(3, 3, 1.0 / 3.0), precondition_error);  // boundary refused
  CHECK_THROWS_AS((void)signed_basis(3, 3, 1.2), precondition_error);
}

TEST_CASE("puub rule nodes and weights") {
  // s = 1 recovers the Levenshtein parameters
  const QuadratureRule r1 = puub_rule(4, 5, 1.0);
  REQUIRE(r1.nodes.size() == 4);
  CHECK(r1.nodes[0] == doctest::Approx(-1.0));
  CHECK(r1.nodes[1] == doctest::Approx(-1.0 / std::sqrt(6.0)).epsilon(1e-11));
  CHECK(r1.nodes[2] == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-11));
  CHECK(r1.weights[0] == doctest::Approx(1.0 / 20).epsilon(1e-10));
  CHECK(r1.weights[1] == doctest::Approx(9.0 / 20).epsilon(1e-10));

  // closed-form interior nodes at general s
  for (double s : {0.794, 0.85}) {
    const QuadratureRule r = puub_rule(4, 5, s);
    const double disc = std::sqrt(28 * std::pow(s, 4) - 16 * std::pow(s, 3) - 12 * s * s + 4 * s + 2);
    const double den = 2.0 * (6.0 * s * s - 2.0 * s - 1.0);
    CHECK(r.nodes[1] == doctest::Approx((2 * s * (s - 1) - disc) / den).epsilon(1e-10));
    CHECK(r.nodes[2] == doctest::Approx((2 * s * (s - 1) + disc) / den).epsilon(1e-10));
    CHECK(r.nodes[3] == doctest::Approx(s));
  }

  const QuadratureRule rc = puub_rule(3, 3, 0.691);
  CHECK(rc.nodes[1] == doctest::Approx(-0.287977632805).epsilon(1e-10));

  // basis polynomials approach P_{k-1+eps}^{(1,1-eps)} as s -> 1
  const auto top9 = signed_basis(4, 5, 0.999).polys.back();
  const auto top99 = signed_basis(4, 5, 0.9999).polys.back();
  const double ref = 1.0 / std::sqrt(6.0);  // largest root of P_2^{(1,1)} on S^3
  const double e9 = std::abs(roots(top9).back() - ref);
  const double e99 = std::abs(roots(top99).back() - ref);
  CHECK(e9 < 1e-3);
  CHECK(e99 < e9);
  CHECK(e99 < 1e-4);
  CHECK(std::abs(roots(signed_basis(4, 5, 1.0).polys.back()).back() - ref) < 1e-8);
}

TEST_CASE("interior node placement") {
  for (double s : {0.75, 0.9, 1.0}) {
    const QuadratureRule r = puub_rule(4, 5, s);
    for (std::size_t i = 1; i + 1 < r.nodes.size(); ++i) {
      CHECK(r.nodes[i] > -1.0);
      CHECK(r.nodes[i] < s);
    }
  }
  for (int tau : {3, 5, 7}) {
    const QuadratureRule r = pulb_rule(5, tau);
    CHECK(r.nodes.front() > -1.0);
    CHECK(r.nodes.back() < 1.0);
  }
}

TEST_SUITE_END();
