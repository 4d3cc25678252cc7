#include "spolar/potentials.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <sstream>

#include "spolar/errors.hpp"

namespace spolar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_order(int order, int max_order) {
  if (order < 0) throw precondition_error("derivative order must be >= 0");
  if (order > max_order)
    throw precondition_error("derivative order " + std::to_string(order) +
                             " exceeds the supported cap " + std::to_string(max_order));
}

}  // namespace

double Potential::derivative(int order, double t) const {
  check_order(order, max_order_);
  return eval_(order, t);
}

DerivSign Potential::derivative_sign(int order) const {
  // sign metadata may be declared past the orders that are evaluable
  check_order(order, kMaxDerivOrder);
  return sign_(order);
}

bool Potential::absolutely_monotone(int order) const {
  for (int j = 0; j <= order; ++j)
    if (derivative_sign(j) != DerivSign::nonneg) return false;
  return true;
}

Potential Potential::riesz(double m) {
  if (!(m > 0.0)) throw precondition_error("riesz exponent m must be > 0");
  Potential h;
  const double q = m / 2.0;
  h.eval_ = [q](int order, double t) {
    const double u = 2.0 - 2.0 * t;
    if (u <= 0.0) return kInf;
    double rising = 1.0;
    for (int j = 0; j < order; ++j) rising *= (q + j);
    return std::ldexp(rising, order) * std::pow(u, -q - order);
  };
  h.sign_ = [](int) { return DerivSign::nonneg; };
  h.continuous_at_one_ = false;
  std::ostringstream name;
  name << "riesz:" << m;
  h.name_ = name.str();
  return h;
}

Potential Potential::gauss() {
  Potential h;
  h.eval_ = [](int order, double t) { return std::ldexp(std::exp(2.0 * (t - 1.0)), order); };
  h.sign_ = [](int) { return DerivSign::nonneg; };
  h.continuous_at_one_ = true;
  h.name_ = "gauss";
  return h;
}

Potential Potential::log_potential() {
  Potential h;
  h.eval_ = [](int order, double t) {
    const double u = 2.0 - 2.0 * t;
    if (u <= 0.0) return kInf;
    if (order == 0) return -0.5 * std::log(u);
    double fact = 1.0;
    for (int j = 1; j < order; ++j) fact *= j;
    return std::ldexp(fact, order - 1) * std::pow(u, -order);
  };
  h.sign_ = [](int order) { return order == 0 ? DerivSign::unknown : DerivSign::nonneg; };
  h.continuous_at_one_ = false;
  h.name_ = "log";
  return h;
}

Potential Potential::sampled(std::vector<std::function<double(double)>> derivatives,
                             std::map<int, DerivSign> signs, bool continuous_at_one,
                             const std::string& name) {
  if (derivatives.empty()) throw precondition_error("sampled potential needs at least h itself");

  // finite-difference consistency of each provided order against the previous
  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> ts(-0.95, 0.95);
  const double step = 1e-5;
  for (std::size_t j = 1; j < derivatives.size(); ++j) {
    double worst_rel = 0.0, worst_t = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const double t = ts(rng);
      const double fd = (derivatives[j - 1](t + step) - derivatives[j - 1](t - step)) / (2.0 * step);
      const double exact = derivatives[j](t);
      const double rel = std::abs(fd - exact) / std::max({1.0, std::abs(exact), std::abs(fd)});
      if (rel > worst_rel) {
        worst_rel = rel;
        worst_t = t;
      }
    }
    if (worst_rel > 1e-5) {
      std::ostringstream msg;
      msg << "sampled potential: derivative of order " << j
          << " is inconsistent with finite differences of order " << (j - 1) << " at t=" << worst_t
          << " (relative error " << worst_rel << ")";
      throw precondition_error(msg.str());
    }
  }

  Potential h;
  h.max_order_ = static_cast<int>(derivatives.size()) - 1;
  auto derivs = std::make_shared<std::vector<std::function<double(double)>>>(std::move(derivatives));
  h.eval_ = [derivs](int order, double t) { return (*derivs)[static_cast<std::size_t>(order)](t); };
  auto sign_map = std::make_shared<std::map<int, DerivSign>>(std::move(signs));
  h.sign_ = [sign_map](int order) {
    auto it = sign_map->find(order);
    return it == sign_map->end() ? DerivSign::unknown : it->second;
  };
  h.continuous_at_one_ = continuous_at_one;
  h.name_ = name;
  return h;
}

Potential parse_potential(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "gauss") return Potential::gauss();
  if (name == "log") return Potential::log_potential();
  if (name == "newton") return Potential::riesz(2.0);
  if (name == "riesz") {
    if (param.empty()) throw precondition_error("riesz needs a parameter, e.g. riesz:2");
    try {
      return Potential::riesz(std::stod(param));
    } catch (const std::logic_error&) {
      throw precondition_error("cannot parse riesz parameter '" + param + "'");
    }
  }
  throw precondition_error("unknown potential '" + spec +
                           "'; builtins: riesz:m, gauss, log, newton (= riesz:2)");
}

}  // namespace spolar
