#include <cmath>
#include <random>

#include "doctest.h"
#include "spolar/errors.hpp"
#include "spolar/potentials.hpp"

using namespace spolar;

TEST_SUITE_BEGIN("potentials");

TEST_CASE("riesz values") {
  const Potential h1 = Potential::riesz(1);
  CHECK(h1(1.0 / std::sqrt(3.0)) == doctest::Approx(1.0876638736).epsilon(1e-9));
  CHECK(h1(-1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::isinf(h1(1.0)));
  CHECK_FALSE(h1.continuous_at_one());

  const Potential h2 = Potential::riesz(2);  // Newton kernel on S^3
  CHECK(h2(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(h2.derivative_sign(7) == DerivSign::nonneg);
  CHECK_THROWS_AS((void)Potential::riesz(0.0), precondition_error);
}

TEST_CASE("gauss values") {
  const Potential w = Potential::gauss();
  CHECK(w(1.0) == doctest::Approx(1.0));
  CHECK(w(0.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(w.continuous_at_one());
  const double s2 = 1.0 / std::sqrt(2.0);
  CHECK(6 * w(-s2) + 12 * w(0.0) + 6 * w(s2) == doctest::Approx(5.1614).epsilon(1e-5));
  for (int j = 0; j <= 24; ++j) CHECK(w.derivative(j, 0.3) == doctest::Approx(std::ldexp(w(0.3), j)));
}

TEST_CASE("derivatives match finite differences") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ts(-0.95, 0.95);
  for (const Potential& h : {Potential::riesz(1.7), Potential::gauss(), Potential::log_potential()}) {
    for (int order = 1; order <= 5; ++order) {
      for (int trial = 0; trial < 50; ++trial) {
        const double t = ts(rng);
        const double d = 1e-5;
        const double fd = (h.derivative(order - 1, t + d) - h.derivative(order - 1, t - d)) / (2 * d);
        const double exact = h.derivative(order, t);
        CHECK(std::abs(fd - exact) <= 1e-5 * std::max({1.0, std::abs(exact), std::abs(fd)}));
      }
    }
  }
}

TEST_CASE("monotonicity and convexity spot checks") {
  for (const Potential& h : {Potential::riesz(1), Potential::riesz(2), Potential::gauss()}) {
    for (int i = 0; i < 100; ++i) {
      const double t = -0.99 + 1.98 * i / 99.0;
      CHECK(h.derivative(1, t) > 0.0);
      CHECK(h.derivative(2, t) > 0.0);
    }
  }
}

TEST_CASE("derivative order cap") {
  CHECK_THROWS_AS((void)Potential::gauss().derivative(25, 0.0), precondition_error);
  CHECK_THROWS_AS((void)Potential::gauss().derivative(-1, 0.0), precondition_error);
}

TEST_CASE("sampled potentials") {
  const Potential r1 = Potential::riesz(1);
  const Potential wrapped = Potential::sampled(
      {[&](double t) { return r1(t); }, [&](double t) { return r1.derivative(1, t); },
       [&](double t) { return r1.derivative(2, t); }},
      {{4, DerivSign::nonpos}}, false, "wrapped-riesz");
  for (int i = 0; i <= 20; ++i) {
    const double t = -1.0 + 1.9 * i / 20.0;
    CHECK(wrapped(t) == doctest::Approx(r1(t)).epsilon(1e-12));
  }
  CHECK(wrapped.derivative_sign(4) == DerivSign::nonpos);  // metadata passthrough
  CHECK(wrapped.derivative_sign(1) == DerivSign::unknown);
  CHECK(wrapped.max_order() == 2);

  // a wrong derivative is rejected at construction
  CHECK_THROWS_AS((void)Potential::sampled({[](double t) { return t * t * t; },
                                            [](double t) { return 2.0 * t * t; }}),
                  precondition_error);
}

TEST_CASE("potential spec parsing") {
  CHECK(parse_potential("riesz:2")(0.0) == doctest::Approx(0.5));
  CHECK(parse_potential("newton")(0.0) == doctest::Approx(0.5));
  CHECK(parse_potential("gauss")(1.0) == doctest::Approx(1.0));
  CHECK(parse_potential("log")(-1.0) == doctest::Approx(-0.5 * std::log(4.0)));
  CHECK_THROWS_AS((void)parse_potential("coulomb"), precondition_error);
  CHECK_THROWS_AS((void)parse_potential("riesz"), precondition_error);
  CHECK_THROWS_AS((void)parse_potential("riesz:x"), precondition_error);
}

TEST_SUITE_END();
