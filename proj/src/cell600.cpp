#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "spolar/bounds.hpp"
#include "spolar/errors.hpp"

namespace spolar {

namespace {

// Minimal double-double arithmetic. The P_12-coefficient identities of the
// node products are checked to 1e-12 relative on values of order 2^-14, which
// is out of reach of plain double accumulation.
struct dd {
  double hi = 0.0, lo = 0.0;
};

dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

dd dd_sub(dd a, dd b) { return dd_add(a, {-b.hi, -b.lo}); }

dd dd_mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

dd dd_muld(dd a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

dd dd_div(dd a, dd b) {
  const double q1 = a.hi / b.hi;
  dd r = dd_sub(a, dd_muld(b, q1));
  const double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_muld(b, q2));
  const double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  q.lo += q3;
  return quick_two_sum(q.hi, q.lo);
}

dd dd_sqrt5() {
  const double hi = std::sqrt(5.0);
  const double lo = std::fma(-hi, hi, 5.0) / (2.0 * hi);
  return quick_two_sum(hi, lo);
}

// the nine inner products b_1..b_9 in double-double
std::array<dd, 9> cell600_nodes_dd() {
  const dd s5 = dd_sqrt5();
  const dd one{1.0, 0.0};
  std::array<dd, 9> b;
  b[0] = {-1.0, 0.0};
  b[1] = dd_muld(dd_add(one, s5), -0.25);  // -(1+sqrt5)/4
  b[2] = {-0.5, 0.0};
  b[3] = dd_muld(dd_sub(one, s5), 0.25);  // (1-sqrt5)/4
  b[4] = {0.0, 0.0};
  b[5] = dd_muld(dd_sub(s5, one), 0.25);  // (sqrt5-1)/4
  b[6] = {0.5, 0.0};
  b[7] = dd_muld(dd_add(one, s5), 0.25);  // (1+sqrt5)/4
  b[8] = {1.0, 0.0};
  return b;
}

// interpolation multiset T: b_1 simple, b_2..b_8 double, b_9 simple
std::vector<dd> multiset_dd() {
  const auto b = cell600_nodes_dd();
  std::vector<dd> t;
  t.push_back(b[0]);
  for (int i = 1; i <= 7; ++i) {
    t.push_back(b[static_cast<std::size_t>(i)]);
    t.push_back(b[static_cast<std::size_t>(i)]);
  }
  t.push_back(b[8]);
  return t;
}

// monic partial product prod_{i<j} (t - T_i), coefficients low->high
std::vector<dd> partial_product(const std::vector<dd>& t, int j) {
  std::vector<dd> c{{1.0, 0.0}};
  for (int i = 0; i < j; ++i) {
    c.push_back({0.0, 0.0});
    for (std::size_t m = c.size() - 1; m >= 1; --m)
      c[m] = dd_sub(c[m - 1], dd_mul(t[static_cast<std::size_t>(i)], c[m]));
    c[0] = dd_mul(dd_sub({0.0, 0.0}, t[static_cast<std::size_t>(i)]), c[0]);
  }
  return c;
}

double binom_exact(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  double r = 1.0;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

// coefficient of U_k (classical Gegenbauer C_j^{(1)} basis, n = 4) from
// monomial coefficients via t^m = 2^-m sum_j [C(m,(m-j)/2) - C(m,(m-j)/2-1)] U_j
dd u_coefficient(const std::vector<dd>& mono, int k) {
  dd acc{0.0, 0.0};
  for (int m = k; m < static_cast<int>(mono.size()); m += 2) {
    const int half = (m - k) / 2;
    const double a = std::ldexp(binom_exact(m, half) - binom_exact(m, half - 1), -m);
    acc = dd_add(acc, dd_muld(mono[static_cast<std::size_t>(m)], a));
  }
  return acc;
}

dd u_coefficient_double(const std::vector<double>& mono, int k) {
  std::vector<dd> c(mono.size());
  for (std::size_t i = 0; i < mono.size(); ++i) c[i] = {mono[i], 0.0};
  return u_coefficient(c, k);
}

}  // namespace

const std::array<double, 9>& cell600_inner_products() {
  static const std::array<double, 9> b = [] {
    std::array<double, 9> out{};
    const auto bd = cell600_nodes_dd();
    for (std::size_t i = 0; i < 9; ++i) out[i] = bd[i].hi;
    return out;
  }();
  return b;
}

const std::array<int, 9>& cell600_multiplicities() {
  static const std::array<int, 9> m{1, 12, 20, 12, 30, 12, 20, 12, 1};
  return m;
}

Cell600Result cell600_bound(const Potential& h) {
  if (!h.absolutely_monotone(16))
    throw precondition_error(
        "the 600-cell bound needs h absolutely monotone of order 16 (declare the derivative "
        "signs explicitly for user potentials)");
  if (!h.continuous_at_one())
    throw precondition_error("the 600-cell min-max bound is infinite for potentials singular at "
                             "t = 1 (" + h.name() + "); it needs h finite and continuous at 1");

  Cell600Result result;
  const auto& b = cell600_inner_products();
  const auto& mult = cell600_multiplicities();

  double value = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    const double term = mult[i] * h(b[i]) - comp;
    const double next = value + term;
    comp = (next - value) - term;
    value = next;
  }

  // degree-15 Hermite interpolant at the multiset T
  NodeMultiset nodes;
  for (std::size_t i = 0; i < 9; ++i)
    nodes.entries.push_back({b[i], (i == 0 || i == 8) ? 1 : 2});
  Interpolant g = hermite(h, nodes);

  // P_12 coefficients of the partial products in the classical basis
  const auto T = multiset_dd();
  for (int j = 12; j <= 16; ++j)
    result.diag.partial_coefficients[static_cast<std::size_t>(j - 12)] =
        u_coefficient(partial_product(T, j), 12).hi;

  const std::vector<dd> g16 = partial_product(T, 16);
  const dd g16_12 = u_coefficient(g16, 12);
  const dd g_12 = u_coefficient_double(g.poly.coefficients(), 12);
  result.diag.g_coefficient_12 = g_12.hi;
  const dd corr = dd_div(g_12, g16_12);
  result.diag.correction_factor = corr.hi;

  std::vector<double> g16_d(g16.size());
  for (std::size_t i = 0; i < g16.size(); ++i) g16_d[i] = g16[i].hi;
  Polynomial H = g.poly - Polynomial(std::move(g16_d)) * corr.hi;
  result.diag.g = g;
  result.diag.H = H;

  // H >= h on [-1,1]: 8192 Chebyshev points plus refinement near the nine
  // contact abscissae (the only places the surplus can vanish)
  const auto surplus = [&](double t) { return H(t) - h(t); };
  double min_surplus = std::numeric_limits<double>::infinity();
  constexpr int kSamples = 8192;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = -std::cos(M_PI * static_cast<double>(i) / kSamples);
    min_surplus = std::min(min_surplus, surplus(t));
  }
  constexpr double kGolden = 0.6180339887498949;
  for (std::size_t i = 0; i < 9; ++i) {
    double lo = std::max(-1.0, b[i] - 1e-3), hi = std::min(1.0, b[i] + 1e-3);
    double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
    double s1 = surplus(x1), s2 = surplus(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
      if (s1 <= s2) {
        hi = x2;
        x2 = x1;
        s2 = s1;
        x1 = hi - kGolden * (hi - lo);
        s1 = surplus(x1);
      } else {
        lo = x1;
        x1 = x2;
        s1 = s2;
        x2 = lo + kGolden * (hi - lo);
        s2 = surplus(x2);
      }
    }
    min_surplus = std::min(min_surplus, surplus(0.5 * (lo + hi)));
  }
  result.diag.min_surplus = min_surplus;
  if (min_surplus < -1e-8)
    throw numeric_error("600-cell certificate failed: H dips below h by " +
                        std::to_string(-min_surplus));

  const std::vector<double> geg = gegenbauer_coefficients(H, 4);
  result.diag.p12_residual = geg.size() > 12 ? geg[12] : 0.0;
  result.diag.h0_times_n = 120.0 * geg[0];

  BoundReport report;
  report.kind = BoundKind::CELL600;
  report.N = 120;
  report.value = value;
  report.interpolant = std::move(g);
  report.consistent =
      std::abs(result.diag.h0_times_n - value) <= 1e-7 * std::max(1.0, std::abs(value)) &&
      std::abs(result.diag.p12_residual) <= 1e-9;

  // attainment at a vertex: T(x, C0) must reproduce B with the multiplicities
  {
    const SphericalCode c600 = cell600();
    AttainmentDiagnostics diag;
    diag.witness = c600.point(0);
    const InnerProductProfile prof = inner_products(diag.witness, c600);
    diag.attained = prof.levels.size() == 9;
    if (diag.attained) {
      for (std::size_t i = 0; i < 9; ++i) {
        if (std::abs(prof.levels[i] - b[i]) > 1e-9 || prof.multiplicities[i] != mult[i])
          diag.attained = false;
        diag.multiplicities.push_back(mult[i]);
      }
    }
    diag.integer_multiplicities = true;
    diag.note = diag.attained ? "vertex witness matches B with multiplicities (1,12,20,12,30,12,20,12,1)"
                              : "vertex inner-product profile mismatch";
    report.attainment = std::move(diag);
  }

  result.report = std::move(report);
  return result;
}

}  // namespace spolar
