#include "spolar/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "spolar/errors.hpp"

namespace spolar {

namespace {
constexpr double kAdmissTol = 1e-9;
}

NodeMultiset NodeMultiset::simple(const std::vector<double>& nodes) {
  NodeMultiset ms;
  ms.entries.reserve(nodes.size());
  for (double t : nodes) ms.entries.push_back({t, 1});
  return ms;
}

int NodeMultiset::total_count() const {
  int c = 0;
  for (const auto& e : entries) c += e.multiplicity;
  return c;
}

std::vector<double> NodeMultiset::expanded() const {
  std::vector<double> z;
  z.reserve(static_cast<std::size_t>(total_count()));
  for (const auto& e : entries) {
    if (e.multiplicity < 1 || e.multiplicity > 2)
      throw precondition_error("node multiplicities must be 1 or 2");
    for (int m = 0; m < e.multiplicity; ++m) z.push_back(e.node);
  }
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (!(entries[i].node > entries[i - 1].node))
      throw precondition_error("interpolation nodes must be strictly ascending");
  return z;
}

double Interpolant::operator()(double t) const {
  const std::vector<double> z = nodeset.expanded();
  long double acc = divided_differences.back();
  for (std::size_t j = divided_differences.size() - 1; j-- > 0;)
    acc = acc * (t - z[j]) + static_cast<long double>(divided_differences[j]);
  return static_cast<double>(acc);
}

Interpolant hermite(const Potential& h, const NodeMultiset& nodes) {
  const std::vector<double> z = nodes.expanded();
  const std::size_t count = z.size();
  if (count == 0) throw precondition_error("hermite needs at least one node");
  if (count > 41) throw precondition_error("hermite supports at most 41 interpolation conditions");

  // generalized divided differences, extended precision; the confluent entry
  // h[t,t] = h'(t) can only appear at level 1 since multiplicities are <= 2
  std::vector<long double> col(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = h(z[i]);
    if (!std::isfinite(v))
      throw precondition_error("potential is not finite at interpolation node t = " +
                               std::to_string(z[i]));
    col[i] = v;
  }
  std::vector<double> coef(count);
  coef[0] = static_cast<double>(col[0]);
  for (std::size_t j = 1; j < count; ++j) {
    std::vector<long double> next(count - j);
    for (std::size_t i = 0; i + j < count; ++i) {
      if (z[i + j] == z[i])
        next[i] = h.derivative(1, z[i]);
      else
        next[i] = (col[i + 1] - col[i]) / (static_cast<long double>(z[i + j]) - z[i]);
    }
    col = std::move(next);
    coef[j] = static_cast<double>(col[0]);
  }

  // Newton form -> monomial coefficients: repeatedly multiply by (t - z[j])
  // and add the next divided difference, extended precision throughout
  std::vector<long double> mono{static_cast<long double>(coef[count - 1])};
  for (std::size_t j = count - 1; j-- > 0;) {
    mono.push_back(0.0L);
    for (std::size_t i = mono.size() - 1; i >= 1; --i) mono[i] = mono[i - 1] - z[j] * mono[i];
    mono[0] = -z[j] * mono[0];
    mono[0] += coef[j];
  }
  std::vector<double> out(mono.size());
  for (std::size_t i = 0; i < mono.size(); ++i) out[i] = static_cast<double>(mono[i]);

  Interpolant result;
  result.poly = Polynomial(std::move(out));
  result.nodeset = nodes;
  result.divided_differences = std::move(coef);
  return result;
}

namespace {

struct ScanResult {
  double min_value = std::numeric_limits<double>::infinity();
  double min_t = 0.0;
  int samples = 0;
};

// min of g over [lo,hi]: dense Chebyshev sampling, then golden-section
// refinement around each sampled local minimum.
ScanResult scan_minimum(const std::function<double(double)>& g, double lo, double hi) {
  constexpr int kSamples = 4096;
  constexpr double kGolden = 0.6180339887498949;
  ScanResult res;
  std::vector<double> ts(kSamples + 1), gs(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) {
    const double theta = M_PI * static_cast<double>(kSamples - i) / kSamples;
    ts[static_cast<std::size_t>(i)] = lo + (hi - lo) * 0.5 * (1.0 + std::cos(theta));
    gs[static_cast<std::size_t>(i)] = g(ts[static_cast<std::size_t>(i)]);
  }
  res.samples = kSamples + 1;
  for (int i = 0; i <= kSamples; ++i) {
    if (gs[static_cast<std::size_t>(i)] < res.min_value) {
      res.min_value = gs[static_cast<std::size_t>(i)];
      res.min_t = ts[static_cast<std::size_t>(i)];
    }
  }
  for (int i = 1; i < kSamples; ++i) {
    if (!(gs[static_cast<std::size_t>(i)] <= gs[static_cast<std::size_t>(i - 1)] &&
          gs[static_cast<std::size_t>(i)] <= gs[static_cast<std::size_t>(i + 1)]))
      continue;
    double a = ts[static_cast<std::size_t>(i - 1)], b = ts[static_cast<std::size_t>(i + 1)];
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double g1 = g(x1), g2 = g(x2);
    for (int it = 0; it < 60 && b - a > 1e-14; ++it) {
      if (g1 <= g2) {
        b = x2;
        x2 = x1;
        g2 = g1;
        x1 = b - kGolden * (b - a);
        g1 = g(x1);
      } else {
        a = x1;
        x1 = x2;
        g1 = g2;
        x2 = a + kGolden * (b - a);
        g2 = g(x2);
      }
    }
    const double xm = 0.5 * (a + b);
    const double gm = g(xm);
    if (gm < res.min_value) {
      res.min_value = gm;
      res.min_t = xm;
    }
  }
  return res;
}

}  // namespace

AdmissibilityReport check_lower_admissible(const Polynomial& f, const Potential& h, int tau) {
  AdmissibilityReport report;
  report.degree_ok = f.degree() <= tau;
  const auto surplus = [&](double t) {
    const double hv = h(t);
    if (!std::isfinite(hv)) return std::numeric_limits<double>::infinity();
    return hv - f(t);
  };
  const ScanResult scan = scan_minimum(surplus, -1.0, 1.0);
  report.samples = scan.samples;
  report.worst_t = scan.min_t;
  report.worst_violation = scan.min_value < 0.0 ? -scan.min_value : 0.0;
  report.pass = report.degree_ok && scan.min_value >= -kAdmissTol;
  return report;
}

AdmissibilityReport check_upper_admissible(const Polynomial& f, const Potential& h, int tau,
                                           double s) {
  if (!(s > -1.0 && s <= 1.0)) throw precondition_error("s must lie in (-1, 1]");
  AdmissibilityReport report;
  report.degree_ok = f.degree() <= tau;
  const auto surplus = [&](double t) {
    const double hv = h(t);
    if (!std::isfinite(hv)) return -std::numeric_limits<double>::infinity();
    return f(t) - hv;
  };
  const ScanResult scan = scan_minimum(surplus, -1.0, s);
  report.samples = scan.samples;
  report.worst_t = scan.min_t;
  report.worst_violation = scan.min_value < 0.0 ? -scan.min_value : 0.0;
  report.pass = report.degree_ok && scan.min_value >= -kAdmissTol;
  return report;
}

}  // namespace spolar
