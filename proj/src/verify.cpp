#include "ratgrow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace ratgrow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;  // golden-section interior ratio
constexpr double kStepTol = 1e-12;              // proof-step inequality slop
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // fmod can round up to the period itself
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double min_pole_distance(const PoleSetd& poles, Complexd z) {
  double best = kInf;
  for (Eigen::Index j = 0; j < poles.size(); ++j) best = std::min(best, std::abs(z - poles[j]));
  return best;
}

/// Unit-circle lattice scan of |r(eta z)| and |r(z)| with skip bookkeeping.
struct CircleField {
  RealArrayd theta;
  RealArrayd mag_shrunk;  // |r(eta e^{i theta})|
  RealArrayd mag_unit;    // |r(e^{i theta})|
  std::vector<char> skip;
  long skipped = 0;
  double vacuous_cut = 0.0;
};

CircleField scan_circle(const Polynomiald& numerator, const PoleSetd& poles, double eta, int points) {
  CircleField fld;
  fld.theta.resize(points);
  ComplexArrayd z(points), zs(points);
  for (int j = 0; j < points; ++j) {
    const double th = kTwoPi * j / points;
    fld.theta[j] = th;
    z[j] = std::polar(1.0, th);
    zs[j] = eta * z[j];
  }
  const RealArrayd f_unit = numerator(z).abs();
  const RealArrayd f_shrunk = numerator(zs).abs();
  const RealArrayd w_unit = w_eval(poles, z).abs();
  const RealArrayd w_shrunk = w_eval(poles, zs).abs();

  fld.vacuous_cut = kVacuousTol * numerator.max_coeff_modulus() / w_unit.minCoeff();

  RealArrayd dist_unit = RealArrayd::Constant(points, kInf);
  RealArrayd dist_shrunk = RealArrayd::Constant(points, kInf);
  for (Eigen::Index j = 0; j < poles.size(); ++j) {
    dist_unit = dist_unit.min((z - poles[j]).abs());
    dist_shrunk = dist_shrunk.min((zs - poles[j]).abs());
  }

  fld.mag_unit = f_unit / w_unit;
  fld.mag_shrunk = f_shrunk / w_shrunk;
  fld.skip.assign(points, 0);
  for (int j = 0; j < points; ++j) {
    const bool pole_hit = dist_unit[j] <= kPoleHitTol || dist_shrunk[j] <= kPoleHitTol;
    // <= so the zero polynomial (cut 0) skips everywhere
    if (pole_hit || fld.mag_unit[j] <= fld.vacuous_cut) {
      fld.skip[j] = 1;
      ++fld.skipped;
    }
  }
  return fld;
}

/// Golden-section minimization on [a, b]; f may return +inf for skipped
/// angles. Left branch wins ties so smaller angles are preferred.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, int iters) {
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

/// Pointwise ratio |r(eta e^{i th})| / |r(e^{i th})| for the refinement pass,
/// +inf where the grid policy would skip the angle.
double ratio_at(const Polynomiald& numerator, const PoleSetd& poles, double eta, double vacuous_cut,
                double th) {
  const Complexd z = std::polar(1.0, th);
  const Complexd zs = eta * z;
  if (min_pole_distance(poles, z) <= kPoleHitTol || min_pole_distance(poles, zs) <= kPoleHitTol)
    return kInf;
  const double unit = std::abs(numerator(z)) / std::abs(w_eval(poles, z));
  if (unit <= vacuous_cut) return kInf;
  return (std::abs(numerator(zs)) / std::abs(w_eval(poles, zs))) / unit;
}

MinSearchResult min_ratio_impl(const Polynomiald& numerator, const PoleSetd& poles, double eta,
                               const CircleGrid& grid) {
  grid.validate();
  const CircleField fld = scan_circle(numerator, poles, eta, grid.points);
  double best = kInf;
  int best_j = -1;
  for (int j = 0; j < grid.points; ++j) {
    if (fld.skip[j]) continue;
    const double q = fld.mag_shrunk[j] / fld.mag_unit[j];
    if (q < best) {
      best = q;
      best_j = j;
    }
  }
  if (best_j < 0) throw AllSkipped("min_ratio_search: every grid point skipped (numerator vanishes on the circle?)");

  const double h = kTwoPi / grid.points;
  const double center = fld.theta[best_j];
  const auto f = [&](double th) { return ratio_at(numerator, poles, eta, fld.vacuous_cut, th); };
  const auto [th_ref, val_ref] = golden_min(f, center - h, center + h, grid.refine_iters);

  MinSearchResult out;
  out.skipped_points = fld.skipped;
  if (val_ref < best) {
    out.min_ratio = val_ref;
    out.argmin_theta = wrap_angle(th_ref);
  } else {
    out.min_ratio = best;
    out.argmin_theta = center;
  }
  return out;
}

VerificationReport pointwise_impl(const Polynomiald& numerator, const PoleSetd& poles, double eta,
                                  double factor, const CircleGrid& grid) {
  grid.validate();
  VerificationReport rep;
  rep.params.eta = eta;
  rep.factor = factor;
  rep.mode = "pointwise";
  rep.status = "checked";

  const CircleField fld = scan_circle(numerator, poles, eta, grid.points);
  rep.skipped_points = fld.skipped;
  double best = kInf;
  int best_j = -1;
  for (int j = 0; j < grid.points; ++j) {
    if (fld.skip[j]) continue;
    if (fld.mag_shrunk[j] < factor * fld.mag_unit[j] * (1.0 - kRelTol) - kAbsTol) ++rep.violations;
    const double q = fld.mag_shrunk[j] / fld.mag_unit[j];
    if (q < best) {
      best = q;
      best_j = j;
    }
  }
  if (best_j >= 0) {
    rep.pass = rep.violations == 0;
    rep.min_observed = best;
    rep.argmin_theta = fld.theta[best_j];
    rep.slack = best - factor;
  } else {
    // nothing was checked, so nothing was verified
    rep.pass = false;
    rep.status = "all_skipped";
    rep.min_observed = kNaN;
    rep.argmin_theta = kNaN;
    rep.slack = kNaN;
  }
  return rep;
}

/// Refined maximum of |p| on the circle of the given radius.
std::pair<double, double> max_on_circle(const Polynomiald& p, double radius, const CircleGrid& grid) {
  ComplexArrayd z(grid.points);
  RealArrayd theta(grid.points);
  for (int j = 0; j < grid.points; ++j) {
    theta[j] = kTwoPi * j / grid.points;
    z[j] = radius * std::polar(1.0, theta[j]);
  }
  const RealArrayd mag = p(z).abs();
  int best_j = 0;
  for (int j = 1; j < grid.points; ++j)
    if (mag[j] > mag[best_j]) best_j = j;

  const double h = kTwoPi / grid.points;
  const auto neg = [&](double th) { return -std::abs(p(radius * std::polar(1.0, th))); };
  const auto [th_ref, neg_ref] = golden_min(neg, theta[best_j] - h, theta[best_j] + h, grid.refine_iters);
  if (-neg_ref > mag[best_j]) return {-neg_ref, wrap_angle(th_ref)};
  return {mag[best_j], theta[best_j]};
}

VerificationReport maxnorm_check(TheoremId id, const Polynomiald& numerator, double factor,
                                 const BoundParamsd& params, const CircleGrid& grid) {
  const double radius = id == TheoremId::E2_MAXMOD ? params.nu : params.eta;
  const auto [m_target, arg_target] = max_on_circle(numerator, radius, grid);
  const auto [m_unit, arg_unit] = max_on_circle(numerator, 1.0, grid);
  (void)arg_unit;

  VerificationReport rep;
  rep.theorem = id;
  rep.params = params;
  rep.factor = factor;
  rep.mode = "maxnorm";
  rep.status = "checked";
  rep.min_observed = m_target / m_unit;
  rep.argmin_theta = arg_target;
  if (id == TheoremId::E2_MAXMOD) {
    rep.pass = rep.min_observed <= factor * (1.0 + kRelTol) + kAbsTol;
    rep.slack = factor - rep.min_observed;
  } else {
    rep.pass = rep.min_observed >= factor * (1.0 - kRelTol) - kAbsTol;
    rep.slack = rep.min_observed - factor;
  }
  rep.violations = rep.pass ? 0 : 1;
  return rep;
}

}  // namespace

MinSearchResult min_ratio_search(const RationalFunctiond& rat, double eta, const CircleGrid& grid) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("min_ratio_search: eta must lie in [0,1]");
  return min_ratio_impl(rat.numerator(), rat.poles(), eta, grid);
}

MinSearchResult min_ratio_search(const Polynomiald& p, double eta, const CircleGrid& grid) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("min_ratio_search: eta must lie in [0,1]");
  return min_ratio_impl(p, PoleSetd{}, eta, grid);
}

VerificationReport pointwise_check(const RationalFunctiond& rat, double eta, double factor,
                                   const CircleGrid& grid) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("pointwise_check: eta must lie in [0,1]");
  return pointwise_impl(rat.numerator(), rat.poles(), eta, factor, grid);
}

VerificationReport verify_theorem(TheoremId id, const Instance& inst, const BoundParamsd& params,
                                  const CircleGrid& grid, double pole_margin) {
  grid.validate();
  params.validate();
  if (inst.n < 1) throw DomainError("verify_theorem: instance needs n >= 1");
  const unsigned n = static_cast<unsigned>(inst.n);

  if (is_rational_theorem(id)) {
    if (inst.poles.size() != static_cast<Eigen::Index>(n))
      throw DomainError("verify_theorem: rational bound needs exactly n poles");
  } else if (inst.poles.size() != 0) {
    throw DomainError("verify_theorem: polynomial bound applies to pole-free instances");
  }

  VerificationReport rep;
  rep.theorem = id;
  rep.params = params;
  rep.instance_digest = instance_digest(inst);

  if (is_maxnorm_theorem(id)) {
    // No zero-location hypothesis: these hold for every polynomial.
    rep.hypothesis_validated = true;
    const BoundFactord bf = factor_polynomial(id, params, n);
    VerificationReport mrep = maxnorm_check(id, inst.numerator, bf.value, params, grid);
    mrep.instance_digest = rep.instance_digest;
    mrep.hypothesis_validated = true;
    return mrep;
  }

  const auto unmet = [&rep]() -> VerificationReport& {
    rep.status = "hypothesis_unmet";
    rep.mode = "pointwise";
    rep.min_observed = kNaN;
    rep.argmin_theta = kNaN;
    rep.slack = kNaN;
    return rep;
  };

  // Hypothesis gate. Root locations are checked when known; otherwise the
  // coefficient necessary condition |a0| >= |an| k^n stands in for them.
  // The pole margin is enforced either way: poles are exact in both forms.
  const double keff = uses_k(id) ? params.k : 1.0;
  if (inst.roots) {
    const ValidationOutcome vo = validate_instance(*inst.roots, inst.poles, ZeroConstraint(keff), pole_margin);
    rep.hypothesis_validated = vo.accepted;
    if (!vo.accepted) return unmet();
  } else {
    rep.hypothesis_validated = false;
    if (!validate_poles(inst.poles, pole_margin).accepted) return unmet();
  }

  std::optional<CoeffModulid> cm;
  if (uses_coefficients(id)) cm = poly_coeff_moduli(inst.numerator, inst.n);

  const BoundFactord bf = is_rational_theorem(id)
                              ? factor_rational(id, params, n, cm, inst.poles)
                              : factor_polynomial(id, params, n, cm);
  if (bf.hypothesis_warning) {
    unmet();
    rep.factor = bf.value;
    return rep;
  }

  VerificationReport prep = pointwise_impl(inst.numerator, inst.poles, params.eta, bf.value, grid);
  prep.theorem = id;
  prep.params = params;
  prep.instance_digest = rep.instance_digest;
  prep.hypothesis_validated = rep.hypothesis_validated;
  if (prep.status == "checked") {
    MinSearchResult ms = min_ratio_impl(inst.numerator, inst.poles, params.eta, grid);
    prep.min_observed = ms.min_ratio;
    prep.argmin_theta = ms.argmin_theta;
    prep.slack = ms.min_ratio - bf.value;
  }
  return prep;
}

RootRatioCheck check_root_ratio_step(double eta, double eta_j, double delta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("check_root_ratio_step: eta must lie in [0,1]");
  if (!(eta_j >= 1.0)) throw DomainError("check_root_ratio_step: eta_j must be >= 1");
  RootRatioCheck out;
  out.rhs = (eta + eta_j) / (1.0 + eta_j);
  const double c = std::cos(delta);
  const double den2 = 1.0 + eta_j * eta_j - 2.0 * eta_j * c;
  if (den2 <= 0.0) {
    // eta_j = 1, delta = 0: the reference point sits on the root
    out.degenerate = true;
    out.lhs = kInf;
    out.holds = true;
    return out;
  }
  const double num2 = eta * eta + eta_j * eta_j - 2.0 * eta * eta_j * c;
  out.lhs = std::sqrt(num2 / den2);
  out.holds = out.lhs >= out.rhs - kStepTol;
  return out;
}

PoleRatioCheck check_pole_ratio_step(double eta, std::complex<double> beta, double theta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("check_pole_ratio_step: eta must lie in [0,1]");
  const double m = std::abs(beta);
  if (!(m > 1.0)) throw DomainError("check_pole_ratio_step: |beta| must exceed 1");
  PoleRatioCheck out;
  const Complexd z = std::polar(1.0, theta);
  out.lhs = std::abs(z - beta) / std::abs(eta * z - beta);
  out.rhs = (m - 1.0) / (m + eta);
  out.holds = out.lhs >= out.rhs - kStepTol;
  return out;
}

std::string family_tag(ExtremalFamily::Kind kind) {
  switch (kind) {
    case ExtremalFamily::Kind::ZetaPower: return "zeta_power";
    case ExtremalFamily::Kind::KPower: return "k_power";
    case ExtremalFamily::Kind::AbPower: return "ab_power";
    case ExtremalFamily::Kind::LinearGamma: return "linear_gamma";
  }
  return "?";
}

Polynomiald build_family(const ExtremalFamily& family, unsigned n, double k) {
  constexpr double kModTol = 1e-12;
  if (n == 0) throw DomainError("build_family: n must be >= 1");
  if (!(k >= 1.0)) throw DomainError("build_family: k must be >= 1");
  switch (family.kind) {
    case ExtremalFamily::Kind::ZetaPower: {
      if (std::abs(std::abs(family.zeta) - 1.0) > kModTol)
        throw DomainError("build_family: zeta must have modulus 1");
      ComplexVectord roots = ComplexVectord::Constant(n, -family.zeta);
      return poly_from_roots(Complexd(1.0, 0.0), roots);
    }
    case ExtremalFamily::Kind::KPower: {
      ComplexVectord roots = ComplexVectord::Constant(n, Complexd(-k, 0.0));
      return poly_from_roots(Complexd(1.0, 0.0), roots);
    }
    case ExtremalFamily::Kind::AbPower: {
      if (std::abs(std::abs(family.a) - 1.0) > kModTol || std::abs(std::abs(family.b) - 1.0) > kModTol)
        throw DomainError("build_family: a and b must have modulus 1");
      ComplexVectord roots = ComplexVectord::Constant(n, -family.a / family.b);
      return poly_from_roots(ipow(family.b, n), roots);
    }
    case ExtremalFamily::Kind::LinearGamma: {
      if (std::abs(family.gamma) < k - kModTol)
        throw DomainError("build_family: gamma must have modulus >= k");
      ComplexVectord roots = ComplexVectord::Constant(1, -family.gamma);
      return poly_from_roots(Complexd(1.0, 0.0), roots);
    }
  }
  throw DomainError("build_family: unknown family");
}

bool family_matches_theorem(ExtremalFamily::Kind kind, TheoremId id) {
  switch (kind) {
    case ExtremalFamily::Kind::ZetaPower:
    case ExtremalFamily::Kind::AbPower:
      return id == TheoremId::A_RIVLIN || id == TheoremId::C_KM || id == TheoremId::E_DK;
    case ExtremalFamily::Kind::KPower:
      return id == TheoremId::B_AZIZ || id == TheoremId::D_KM || id == TheoremId::F_DK;
    case ExtremalFamily::Kind::LinearGamma:
      return id == TheoremId::D_KM || id == TheoremId::F_DK;
  }
  return false;
}

SharpnessReport sharpness_check(const ExtremalFamily& family, TheoremId id,
                                const BoundParamsd& params, unsigned n, const CircleGrid& grid) {
  if (!is_polynomial_theorem(id) || is_maxnorm_theorem(id))
    throw DomainError("sharpness_check: bound must be a pointwise polynomial bound");
  if (!family_matches_theorem(family.kind, id))
    throw DomainError("sharpness_check: family " + family_tag(family.kind) +
                      " is not an equality case of " + std::string(theorem_tag(id)));
  params.validate();
  const unsigned neff = family.kind == ExtremalFamily::Kind::LinearGamma ? 1u : n;
  if (neff == 0) throw DomainError("sharpness_check: n must be >= 1");

  const Polynomiald poly = build_family(family, neff, params.k);
  std::optional<CoeffModulid> cm;
  if (uses_coefficients(id)) cm = poly_coeff_moduli(poly, static_cast<Eigen::Index>(neff));
  const BoundFactord bf = factor_polynomial(id, params, neff, cm);

  const MinSearchResult ms = min_ratio_impl(poly, PoleSetd{}, params.eta, grid);

  SharpnessReport rep;
  rep.family = family;
  rep.theorem = id;
  rep.params = params;
  rep.n = neff;
  rep.factor = bf.value;
  rep.min_ratio = ms.min_ratio;
  rep.argmin_theta = ms.argmin_theta;
  rep.abs_diff = std::abs(ms.min_ratio - bf.value);
  rep.pass = rep.abs_diff <= 1e-9;
  return rep;
}

double limit_recovery_check(unsigned n, double eta, double k, const Polynomiald& numerator,
                            double beta_modulus, int grid_points) {
  if (n == 0) throw DomainError("limit_recovery_check: n must be >= 1");
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("limit_recovery_check: eta must lie in [0,1]");
  if (!(k >= 1.0)) throw DomainError("limit_recovery_check: k must be >= 1");
  if (!(beta_modulus > 1.0)) throw DomainError("limit_recovery_check: beta_modulus must exceed 1");
  if (grid_points < 16) throw DomainError("limit_recovery_check: grid needs at least 16 points");

  const CoeffModulid cm = poly_coeff_moduli(numerator, static_cast<Eigen::Index>(n));
  BoundParamsd p;
  p.eta = eta;
  p.k = k;
  const BoundFactord bf = factor_polynomial(TheoremId::F_DK, p, n, std::optional<CoeffModulid>(cm));
  if (bf.hypothesis_warning)
    throw DomainError("limit_recovery_check: coefficients violate the zero-exclusion hypothesis");

  const double poleward = ipow((beta_modulus - 1.0) / (beta_modulus + eta), n);
  const Complexd beta(beta_modulus, 0.0);
  double worst = 0.0;
  for (int j = 0; j < grid_points; ++j) {
    const double th = kTwoPi * j / grid_points;
    const Complexd z = std::polar(1.0, th);
    const double q = std::abs((eta * z - beta) / (z - beta));
    const double rational_side = bf.value * poleward * ipow(q, n);
    worst = std::max(worst, std::abs(rational_side - bf.value));
  }
  return worst;
}

}  // namespace ratgrow
