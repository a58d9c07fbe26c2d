#ifndef RATGROW_VERIFY_HPP
#define RATGROW_VERIFY_HPP

#include <complex>
#include <string>
#include <vector>

#include "ratgrow/bounds.hpp"
#include "ratgrow/complex_poly.hpp"
#include "ratgrow/instance.hpp"
#include "ratgrow/rational.hpp"

namespace ratgrow {

/// Evaluation lattice on the unit circle plus local refinement budget.
struct CircleGrid {
  int points = 4096;
  int refine_iters = 60;

  void validate() const {
    if (points < 16) throw DomainError("circle grid needs at least 16 points");
    if (refine_iters < 0) throw DomainError("refine_iters must be nonnegative");
  }
};

// Relative/absolute slop applied when comparing an observed ratio against a
// predicted factor. A point whose reference magnitude falls below
// kVacuousTol * scale carries no information and is skipped.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kVacuousTol = 1e-13;

struct VerificationReport {
  TheoremId theorem = TheoremId::T1_NEW;
  BoundParamsd params;
  double factor = 0.0;
  double min_observed = 0.0;
  double argmin_theta = 0.0;
  double slack = 0.0;
  bool pass = false;
  long violations = 0;
  long skipped_points = 0;
  bool hypothesis_validated = false;
  std::string mode;    // "pointwise" or "maxnorm"
  std::string status;  // "checked", "hypothesis_unmet", or "all_skipped"
  std::string instance_digest;
};

struct MinSearchResult {
  double min_ratio = 0.0;
  double argmin_theta = 0.0;
  long skipped_points = 0;
};

/// Scans |r(eta z)| / |r(z)| over the grid, refines the located minimum with
/// a golden-section pass, and returns the refined minimum. Points where the
/// denominator is vacuously small or that sit on a pole are skipped; if every
/// point is skipped, throws AllSkipped.
MinSearchResult min_ratio_search(const RationalFunctiond& rat, double eta, const CircleGrid& grid);

/// Same search for a bare polynomial (empty pole set).
MinSearchResult min_ratio_search(const Polynomiald& p, double eta, const CircleGrid& grid);

/// Checks |r(eta z)| >= factor * |r(z)| at every grid point, with the
/// tolerance policy above. Fills min/argmin from the grid scan (unrefined).
VerificationReport pointwise_check(const RationalFunctiond& rat, double eta, double factor,
                                   const CircleGrid& grid);

/// Full pipeline for one theorem on one instance: hypothesis validation,
/// factor computation, pointwise check, refined minimum. The max-norm
/// theorems compare refined circle maxima instead of pointwise ratios.
VerificationReport verify_theorem(TheoremId id, const Instance& inst, const BoundParamsd& params,
                                  const CircleGrid& grid, double pole_margin = kDefaultPoleMargin);

struct RootRatioCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  bool degenerate = false;  // eta_j == 1 and delta == 0: both sides 0/0
};

/// Single-root step: the modulus ratio |eta e^{i delta} - eta_j| /
/// |e^{i delta} - eta_j| against its lower envelope (eta + eta_j)/(1 + eta_j).
RootRatioCheck check_root_ratio_step(double eta, double eta_j, double delta);

struct PoleRatioCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Single-pole step: |e^{i theta} - beta| / |eta e^{i theta} - beta| against
/// its lower envelope (|beta| - 1)/(|beta| + eta). Requires |beta| > 1.
PoleRatioCheck check_pole_ratio_step(double eta, std::complex<double> beta, double theta);

/// Closed-form extremal numerators used for sharpness probes.
struct ExtremalFamily {
  enum class Kind {
    ZetaPower,    // (z + zeta)^n, |zeta| = 1
    KPower,       // (z + k)^n
    AbPower,      // (a + b z)^n, |a| = |b| = 1
    LinearGamma,  // z + gamma, |gamma| >= k, degree fixed at 1
  };

  Kind kind = Kind::ZetaPower;
  std::complex<double> zeta{1.0, 0.0};  // ZetaPower
  std::complex<double> a{1.0, 0.0};     // AbPower
  std::complex<double> b{1.0, 0.0};     // AbPower
  std::complex<double> gamma{1.0, 0.0}; // LinearGamma
};

std::string family_tag(ExtremalFamily::Kind kind);

/// Builds the family polynomial at degree n (LinearGamma ignores n and uses 1)
/// and validates the family's own constraints.
Polynomiald build_family(const ExtremalFamily& family, unsigned n, double k);

/// True when the family is the equality case for the theorem.
bool family_matches_theorem(ExtremalFamily::Kind kind, TheoremId id);

struct SharpnessReport {
  ExtremalFamily family;
  TheoremId theorem = TheoremId::T1_NEW;
  BoundParamsd params;
  unsigned n = 1;
  double factor = 0.0;
  double min_ratio = 0.0;
  double argmin_theta = 0.0;
  double abs_diff = 0.0;
  bool pass = false;
};

/// Confirms the predicted factor is attained by the family: the refined
/// minimum ratio must match the factor to within tolerance. Throws
/// DomainError when the family is not an equality case for the theorem.
SharpnessReport sharpness_check(const ExtremalFamily& family, TheoremId id,
                                const BoundParamsd& params, unsigned n, const CircleGrid& grid);

/// max over the grid of | |b(theta)| - g(theta) | where b is the exact
/// minimum-ratio profile for r(z) = f(z)/(z - beta)^n with the n-fold pole
/// beta = beta_modulus, and g is the polynomial-bound profile the pole-free
/// statement predicts in the |beta| -> infinity limit.
double limit_recovery_check(unsigned n, double eta, double k, const Polynomiald& numerator,
                            double beta_modulus, int grid_points = 1024);

}  // namespace ratgrow

#endif  // RATGROW_VERIFY_HPP
