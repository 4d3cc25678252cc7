#include <cmath>

#include "doctest.h"
#include "spolar/bounds.hpp"
#include "spolar/errors.hpp"
#include "spolar/polarization.hpp"
#include "test_util.hpp"

using namespace spolar;
using testutil::polynomial_potential;

namespace {

Potential neg_quartic() {  // h = -t^4, h'''' = -24 <= 0
  return polynomial_potential(Polynomial({0, 0, 0, 0, -1.0}), 6, {{4, DerivSign::nonpos}});
}

Potential neg_cubic() {  // h = -t^3, h''' = -6 <= 0
  return polynomial_potential(Polynomial({0, 0, 0, -1.0}), 5, {{3, DerivSign::nonpos}});
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("pulb golden values") {
  const Potential riesz1 = Potential::riesz(1), riesz2 = Potential::riesz(2),
                  w = Potential::gauss();
  CHECK(pulb(3, 3, 8, riesz1).value == doctest::Approx(6.6027204955).epsilon(1e-9));
  CHECK(pulb(3, 3, 8, w).value == doctest::Approx(1.8883196520).epsilon(1e-9));
  CHECK(pulb(4, 5, 24, riesz2).value == doctest::Approx(18.0).epsilon(1e-12));
  CHECK(pulb(4, 5, 24, w).value == doctest::Approx(5.1614444617).epsilon(1e-9));

  const BoundReport rep = pulb(3, 3, 8, w);
  CHECK(rep.consistent);
  REQUIRE(rep.admissibility.has_value());
  CHECK(rep.admissibility->pass);
  REQUIRE(rep.interpolant.has_value());
  CHECK(rep.interpolant->poly.degree() <= 3);
}

TEST_CASE("pulb preconditions") {
  CHECK_THROWS_WITH_AS((void)pulb(3, 3, 8, neg_quartic()),
                       doctest::Contains("pulb_negative"), precondition_error);
  CHECK_THROWS_AS((void)pulb(3, 3, 4, Potential::gauss()), precondition_error);  // N < D(3,3)
  CHECK_THROWS_AS((void)pulb_negative(3, 3, 8, Potential::gauss()), precondition_error);
}

TEST_CASE("negative pulb closed forms") {
  const Potential h4 = neg_quartic();
  for (int n : {3, 4, 5}) {
    const double expect = h4(-1.0) + (2.0 * n - 2.0) * h4(0.0) + h4(1.0);
    CHECK(pulb_negative(n, 3, 2 * n, h4).value == doctest::Approx(expect).epsilon(1e-10));
  }
  // the cube report: 8 (h(-1)/6 + 2 h(0)/3 + h(1)/6)
  const BoundReport cube = pulb_negative(3, 3, 8, h4);
  CHECK(cube.value ==
        doctest::Approx(8 * (h4(-1.0) / 6 + 2 * h4(0.0) / 3 + h4(1.0) / 6)).epsilon(1e-10));
  CHECK(cube.consistent);
  CHECK(cube.admissibility->pass);

  const Potential h3 = neg_cubic();
  for (int n : {3, 4}) {
    CHECK(pulb_negative(n, 2, n + 1, h3).value ==
          doctest::Approx(h3(1.0) + n * h3(-1.0 / n)).epsilon(1e-10));
  }
}

TEST_CASE("puub golden values") {
  const Potential riesz1 = Potential::riesz(1), riesz2 = Potential::riesz(2),
                  w = Potential::gauss();
  CHECK(puub(3, 3, 8, 0.691, riesz1).value == doctest::Approx(6.8232460465).epsilon(1e-9));
  CHECK(puub(3, 3, 8, 0.691, w).value == doctest::Approx(1.9470639674).epsilon(1e-9));
  CHECK(puub(3, 3, 8, 1.0, w).value == doctest::Approx(2.0795423625).epsilon(1e-9));
  CHECK(puub(4, 5, 24, 0.793867, riesz2).value == doctest::Approx(19.0819065547).epsilon(1e-9));
  CHECK(puub(4, 5, 24, 0.794, riesz2).value == doctest::Approx(19.0840485342).epsilon(1e-9));
  CHECK(puub(4, 5, 24, 0.794, w).value == doctest::Approx(5.1674900970).epsilon(1e-9));
  CHECK(puub(4, 5, 24, 1.0, w).value == doctest::Approx(5.1749864453).epsilon(1e-9));

  const BoundReport rep = puub(4, 5, 24, 0.794, w);
  CHECK(rep.kind == BoundKind::PUUB);
  CHECK(rep.consistent);
  CHECK(rep.admissibility->pass);
  CHECK(puub(4, 5, 24, 1.0, w).kind == BoundKind::PUUB_S1);
}

TEST_CASE("puub preconditions") {
  CHECK_THROWS_AS((void)puub(3, 3, 8, 1.0, Potential::riesz(1)), precondition_error);
  CHECK_THROWS_AS((void)puub(3, 3, 8, 0.2, Potential::gauss()), precondition_error);
  CHECK_THROWS_AS((void)puub(3, 3, 8, 0.691, neg_quartic()), precondition_error);
}

TEST_CASE("fl bound and named s constants") {
  CHECK(std::abs(fl_bound(4, 1)) < 1e-14);
  CHECK(fl_bound(3, 3) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
  for (int n : {3, 4, 5})
    CHECK(fl_bound(n, 4) == doctest::Approx((1 + std::sqrt(n + 3.0)) / (n + 2.0)).epsilon(1e-13));

  CHECK(named_s_star("cube3") == doctest::Approx(0.691));
  CHECK(named_s_star("cell24") == doctest::Approx(0.793867));
  CHECK(named_s_star("cross:4") == doctest::Approx(0.5));
  CHECK(named_s_star("simplex:5") == doctest::Approx(0.2));
  CHECK_THROWS_AS((void)named_s_star("icosahedron"), precondition_error);
}

TEST_CASE("simplex bound") {
  const Potential riesz1 = Potential::riesz(1);
  for (int n : {3, 4, 5}) {
    const BoundReport rep = simplex_bound(n, riesz1, DerivSign::nonneg);
    CHECK(rep.value == doctest::Approx(riesz1(-1.0) + n * riesz1(1.0 / n)).epsilon(1e-12));
    const BoundReport full = pulb(n, 2, n + 1, riesz1);  // even tau: simple node at -1
    CHECK(rep.value == doctest::Approx(full.value).epsilon(1e-12));
    CHECK(full.admissibility->pass);
    CHECK(full.consistent);
    CHECK(rep.consistent);
    REQUIRE(rep.rule.has_value());
    CHECK(rep.rule->nodes[0] == doctest::Approx(-1.0));
    CHECK(rep.rule->nodes[1] == doctest::Approx(1.0 / n).epsilon(1e-12));
  }
  const Potential cpos = polynomial_potential(Polynomial::constant(1.3), 5, {{3, DerivSign::nonneg}});
  const Potential cneg = polynomial_potential(Polynomial::constant(1.3), 5, {{3, DerivSign::nonpos}});
  CHECK(simplex_bound(4, cpos, DerivSign::nonneg).value == doctest::Approx(5 * 1.3));
  CHECK(simplex_bound(4, cneg, DerivSign::nonpos).value == doctest::Approx(5 * 1.3));
  CHECK_THROWS_AS((void)simplex_bound(3, riesz1, DerivSign::nonpos), precondition_error);
}

TEST_CASE("cross-polytope bound") {
  const Potential w = Potential::gauss();
  const double r3 = std::sqrt(3.0);
  const BoundReport rep = cross_polytope_bound(3, w, DerivSign::nonneg);
  CHECK(rep.value ==
        doctest::Approx(3 * std::exp(2 * (-1 / r3 - 1)) + 3 * std::exp(2 * (1 / r3 - 1)))
            .epsilon(1e-12));
  CHECK(rep.value == doctest::Approx(pulb(3, 3, 6, w).value).epsilon(1e-12));

  const Potential h4 = neg_quartic();
  for (int n : {3, 4}) {
    CHECK(cross_polytope_bound(n, h4, DerivSign::nonpos).value ==
          doctest::Approx(pulb_negative(n, 3, 2 * n, h4).value).epsilon(1e-10));
  }
  const Potential cpos = polynomial_potential(Polynomial::constant(0.5), 5, {{4, DerivSign::nonneg}});
  CHECK(cross_polytope_bound(4, cpos, DerivSign::nonneg).value == doctest::Approx(8 * 0.5));
}

TEST_CASE("attainment diagnostics") {
  const Potential w = Potential::gauss();
  {
    const AttainmentDiagnostics diag = check_attainment(cube3(), pulb(3, 3, 8, w));
    CHECK(diag.attained);
    CHECK(diag.integer_multiplicities);
    REQUIRE(diag.multiplicities.size() == 2);
    CHECK(diag.multiplicities[0] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(diag.multiplicities[1] == doctest::Approx(4.0).epsilon(1e-9));
    // witness is an axis intersection
    double best = 2.0;
    for (double x : diag.witness) best = std::min(best, 1.0 - std::abs(x));
    CHECK(best < 1e-6);
  }
  {
    const AttainmentDiagnostics diag = check_attainment(cell24(), pulb(4, 5, 24, w));
    CHECK(diag.attained);
    REQUIRE(diag.multiplicities.size() == 3);
    CHECK(diag.multiplicities[0] == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(diag.multiplicities[1] == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(diag.multiplicities[2] == doctest::Approx(6.0).epsilon(1e-9));
  }
  {
    // 8 * (1/6) is not an integer: the cube cannot attain the negative bound
    const AttainmentDiagnostics diag = check_attainment(cube3(), pulb_negative(3, 3, 8, neg_quartic()));
    CHECK_FALSE(diag.attained);
    CHECK_FALSE(diag.integer_multiplicities);
  }
}

TEST_CASE("strip ordering: pulb below puub") {
  const Potential w = Potential::gauss();
  CHECK(pulb(3, 3, 8, w).value <= puub(3, 3, 8, named_s_star("cube3"), w).value);
  CHECK(pulb(3, 3, 8, w).value <= puub(3, 3, 8, 1.0, w).value);
  CHECK(pulb(4, 5, 24, w).value <= puub(4, 5, 24, named_s_star("cell24"), w).value);
  CHECK(pulb(4, 5, 24, w).value <= puub(4, 5, 24, 1.0, w).value);
  const Potential riesz2 = Potential::riesz(2);
  CHECK(pulb(4, 5, 24, riesz2).value <= puub(4, 5, 24, named_s_star("cell24"), riesz2).value);
}

TEST_CASE("riesz bounds squeeze toward the largest-node value as m grows") {
  const double target = 1.0 / std::sqrt(2.0 - 2.0 / std::sqrt(3.0));
  double prev_err = 1e9;
  for (double m : {4.0, 8.0, 16.0}) {
    const double v = pulb(3, 3, 8, Potential::riesz(m)).value;
    const double r = std::pow(v / 8.0, 1.0 / m);
    const double err = std::abs(r - target);
    CHECK(err < prev_err);
    prev_err = err;
  }
}

TEST_CASE("600-cell coefficients match the exact closed forms") {
  const Cell600Result res = cell600_bound(Potential::gauss());
  const double s5 = std::sqrt(5.0);
  const double expect[5] = {1.0 / 4096, (3 + s5) / 8192, (15 + 3 * s5) / 32768, 5.0 / 16384,
                            1.0 / 16384};
  for (int i = 0; i < 5; ++i)
    CHECK(std::abs(res.diag.partial_coefficients[static_cast<std::size_t>(i)] - expect[i]) <=
          1e-12 * expect[i]);
}

TEST_CASE("600-cell bound for the gauss potential") {
  const Potential w = Potential::gauss();
  const Cell600Result res = cell600_bound(w);

  // independent multiplicity-form arithmetic over the closed-form inner products
  const double s5 = std::sqrt(5.0);
  const double b[9] = {-1.0, -(1 + s5) / 4, -0.5, (1 - s5) / 4, 0.0,
                       (s5 - 1) / 4, 0.5,    (1 + s5) / 4, 1.0};
  const int mult[9] = {1, 12, 20, 12, 30, 12, 20, 12, 1};
  double direct = 0.0;
  for (int i = 0; i < 9; ++i) direct += mult[i] * w(b[i]);
  CHECK(res.report.value == doctest::Approx(direct).epsilon(1e-13));
  CHECK(res.report.value == doctest::Approx(25.832314746281).epsilon(1e-12));

  CHECK(res.diag.min_surplus >= -1e-8);
  CHECK(std::abs(res.diag.p12_residual) <= 1e-9);
  CHECK(std::abs(res.diag.h0_times_n - res.report.value) <= 1e-7 * res.report.value);
  CHECK(res.report.consistent);
  REQUIRE(res.report.attainment.has_value());
  CHECK(res.report.attainment->attained);

  // constant potential: the multiplicities sum to 120
  std::map<int, DerivSign> all_nonneg;
  for (int j = 0; j <= 16; ++j) all_nonneg[j] = DerivSign::nonneg;
  const Potential one = polynomial_potential(Polynomial::constant(1.0), 17, all_nonneg);
  CHECK(cell600_bound(one).report.value == doctest::Approx(120.0).epsilon(1e-13));
}

TEST_CASE("600-cell preconditions") {
  // singular at t = 1 = b9: the interpolation node makes the bound infinite
  CHECK_THROWS_AS((void)cell600_bound(Potential::riesz(2)), precondition_error);
  // undeclared high-derivative signs
  const Potential unsure = Potential::sampled(
      {[](double t) { return std::exp(2 * (t - 1)); }}, {}, true, "unsure");
  CHECK_THROWS_AS((void)cell600_bound(unsure), precondition_error);
}

TEST_CASE("bound reports recompute consistently through both routes") {
  const Potential w = Potential::gauss();
  for (const BoundReport& rep :
       {pulb(3, 3, 8, w), pulb(4, 5, 24, w), puub(3, 3, 8, 0.691, w), puub(4, 5, 24, 1.0, w)}) {
    CHECK(rep.consistent);
    REQUIRE(rep.rule.has_value());
    const double requad = rep.N * rep.rule->apply([&](double t) { return w(t); });
    CHECK(std::abs(requad - rep.value) <= 1e-12 * std::max(1.0, std::abs(rep.value)));
  }
}

TEST_SUITE_END();
