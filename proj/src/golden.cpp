#include "spolar/golden.hpp"

#include <cmath>
#include <cstdio>

#include "spolar/bounds.hpp"
#include "spolar/polarization.hpp"

namespace spolar {

std::vector<GoldenEntry> run_golden_suite(std::uint64_t seed) {
  std::vector<GoldenEntry> out;
  const Potential riesz1 = Potential::riesz(1);
  const Potential riesz2 = Potential::riesz(2);
  const Potential gauss = Potential::gauss();

  const auto add = [&](const std::string& name, double expected, double tol, double computed,
                       const std::string& note = "") {
    GoldenEntry e;
    e.name = name;
    e.expected = expected;
    e.tolerance = tol;
    e.computed = computed;
    e.pass = std::abs(computed - expected) <= tol;
    e.note = note;
    out.push_back(e);
  };

  add("pulb(3,3,8,riesz:1)", 6.6027, 5e-5, pulb(3, 3, 8, riesz1).value);
  add("pulb(3,3,8,gauss)", 1.8883, 5e-5, pulb(3, 3, 8, gauss).value);
  add("pulb(4,5,24,riesz:2)", 18.0, 1e-9, pulb(4, 5, 24, riesz2).value);
  add("pulb(4,5,24,gauss)", 5.1614, 5e-5, pulb(4, 5, 24, gauss).value);

  const double s_cube = named_s_star("cube3");
  add("puub(3,3,8,s=0.691,riesz:1)", 6.8239, 5e-5, puub(3, 3, 8, s_cube, riesz1).value,
      "the reference value was produced at the unrounded covering constant "
      "(~0.6913) behind the rounded label 0.691; at s = 0.691 exactly the bound is 6.823246");
  add("puub(3,3,8,s=0.691,gauss)", 1.9472, 5e-5, puub(3, 3, 8, s_cube, gauss).value,
      "the reference value was produced at the unrounded covering constant "
      "(~0.6913) behind the rounded label 0.691; at s = 0.691 exactly the bound is 1.947064");
  add("puub(3,3,8,s=1,gauss)", 2.0795, 5e-5, puub(3, 3, 8, 1.0, gauss).value);

  const double s24 = named_s_star("cell24");
  add("puub(4,5,24,s*=0.793867,riesz:2)", 19.0819, 5e-5, puub(4, 5, 24, s24, riesz2).value,
      "0.793867 is the certified covering constant whose display rounding is 0.794");
  add("puub(4,5,24,s*=0.793867,gauss)", 5.1675, 5e-5, puub(4, 5, 24, s24, gauss).value);
  add("puub(4,5,24,s=1,gauss)", 5.17499, 5e-6, puub(4, 5, 24, 1.0, gauss).value);

  {
    const ExtremumResult qmin = minimize_potential(cell24(), riesz2, seed);
    GoldenEntry e;
    e.name = "strip 18 <= Q(D4,riesz:2) <= 19.0819";
    e.expected = 18.0;
    e.tolerance = 1e-6;
    e.computed = qmin.value;
    e.pass = qmin.value >= 18.0 - 1e-6 && qmin.value <= 19.0819 + 5e-5;
    out.push_back(e);
  }
  return out;
}

bool print_golden_table(const std::vector<GoldenEntry>& entries) {
  bool all = true;
  std::printf("%-45s %14s %14s %9s  %s\n", "value", "expected", "computed", "tol", "status");
  for (const auto& e : entries) {
    all = all && e.pass;
    std::printf("%-45s %14.7f %14.7f %9.1e  %s\n", e.name.c_str(), e.expected, e.computed,
                e.tolerance, e.pass ? "PASS" : "FAIL");
    if (!e.pass && !e.note.empty()) std::printf("    note: %s\n", e.note.c_str());
  }
  std::printf("golden suite: %s\n", all ? "all values reproduced" : "discrepancies present");
  return all;
}

}  // namespace spolar
