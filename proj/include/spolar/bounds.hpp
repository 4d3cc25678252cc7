#pragma once

#include <array>
#include <optional>
#include <string>

#include "spolar/codes.hpp"
#include "spolar/interpolation.hpp"
#include "spolar/potentials.hpp"
#include "spolar/quadrature.hpp"

namespace spolar {

enum class BoundKind { PULB, PULB_NEG, PUUB, PUUB_S1, FL, CELL600 };

std::string to_string(BoundKind kind);

struct AttainmentDiagnostics {
  bool attained = false;
  Vec witness;
  std::vector<double> multiplicities;  // N * w_i
  bool integer_multiplicities = false;
  std::string note;
};

struct BoundReport {
  BoundKind kind = BoundKind::PULB;
  double value = 0.0;
  int N = 0;
  std::optional<QuadratureRule> rule;
  std::optional<Interpolant> interpolant;
  std::optional<AdmissibilityReport> admissibility;
  std::optional<AttainmentDiagnostics> attainment;
  /// Quadrature-form and multiplicity-form recomputations agree to 1e-10 rel.
  bool consistent = true;
};

/// Certified s constants for the named families (inputs, never computed):
/// the published covering upper bounds 0.691 (cube, n=3 tau=3) and 0.793867 (24-point
/// 5-designs, displayed as 0.794), and the attained values 1/sqrt(2), 1/sqrt(n).
double named_s_star(const std::string& family);

/// Universal lower bound: value = N sum rho_i h(alpha_i); requires
/// h^(tau+1) >= 0 and N >= D(n,tau). Carries the optimal interpolant and its
/// verified lower-admissibility report.
BoundReport pulb(int n, int tau, int N, const Potential& h);

/// Negative-derivative variant: requires h^(tau+1) <= 0.
BoundReport pulb_negative(int n, int tau, int N, const Potential& h);

/// Universal upper bound: requires h^(2k+eps) >= 0, s in the admissible
/// range, h finite on [-1,s]. kind is PUUB_S1 when s == 1.
BoundReport puub(int n, int tau, int N, double s, const Potential& h);

/// Fazekas-Levenshtein lower bound t_k^{0,eps} on the covering quantity of
/// tau-designs.
double fl_bound(int n, int tau);

/// Closed-form simplex bounds (N = n+1, tau = 2): sign = nonneg gives
/// h(-1) + n h(1/n); sign = nonpos gives h(1) + n h(-1/n).
BoundReport simplex_bound(int n, const Potential& h, DerivSign sign);

/// Closed-form cross-polytope bounds (N = 2n, tau = 3): sign = nonneg gives
/// n h(-1/sqrt n) + n h(1/sqrt n); nonpos gives h(-1) + (2n-2) h(0) + h(1).
BoundReport cross_polytope_bound(int n, const Potential& h, DerivSign sign);

/// Searches for a witness x with T(x,C) equal to the rule nodes and
/// multiplicities N*w_i; attainment requires every N*w_i to be a positive integer.
AttainmentDiagnostics check_attainment(const SphericalCode& code, const BoundReport& report,
                                       std::uint64_t seed = 20240901);

/// 600-cell min-max certificate diagnostics.
struct Cell600Diagnostics {
  /// Coefficients of P_12 in the classical (unnormalized) Gegenbauer basis for
  /// the partial node products g_12..g_16; closed forms
  /// {1/2^12, (3+sqrt5)/2^13, (15+3sqrt5)/2^15, 5/2^14, 1/2^14}.
  std::array<double, 5> partial_coefficients{};
  double g_coefficient_12 = 0.0;   // same basis, for g(t;h)
  double correction_factor = 0.0;  // (g)_12 / (g_16)_12
  double h0_times_n = 0.0;         // 120 * H_0
  double min_surplus = 0.0;        // min(H - h) over the verification grid
  double p12_residual = 0.0;       // Gegenbauer coefficient 12 of H
  Interpolant g;                   // degree-15 Hermite interpolant at the multiset T
  Polynomial H;                    // g - correction * g16
};

struct Cell600Result {
  BoundReport report;
  Cell600Diagnostics diag;
};

/// The eight distinct off-diagonal inner products of the 600-cell plus b9 = 1,
/// and the vertex multiplicities (1,12,20,12,30,12,20,12,1).
const std::array<double, 9>& cell600_inner_products();
const std::array<int, 9>& cell600_multiplicities();

/// Min-max bound h(b1) + 12 sum h(b_{2j}) + 20 sum h(b_{4i+3}) + 30 h(b5) + h(b9)
/// with the subspace-interpolation certificate. Requires h absolutely monotone
/// of order 16 and finite at t = 1.
Cell600Result cell600_bound(const Potential& h);

}  // namespace spolar
