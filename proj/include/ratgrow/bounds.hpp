#ifndef RATGROW_BOUNDS_HPP
#define RATGROW_BOUNDS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>

#include "ratgrow/complex_poly.hpp"
#include "ratgrow/errors.hpp"
#include "ratgrow/rational.hpp"

namespace ratgrow {

/// Catalog of the growth bounds the engine can evaluate. The first eight act
/// on polynomials, the rest on rational functions with prescribed poles.
enum class TheoremId {
  E2_MAXMOD,  // max-modulus upper bound nu^n, nu >= 1
  E1_VARGA,   // max-norm lower bound eta^n
  A_RIVLIN,   // ((1+eta)/2)^n, no zeros in |z|<1
  B_AZIZ,     // ((k+eta)/(k+1))^n, no zeros in |z|<k
  C_KM,       // A with coefficient bracket ((1-eta)/(1+eta))^n
  D_KM,       // B with coefficient bracket ((1-eta)/(k+eta))^n
  E_DK,       // A with sharper bracket (1-eta)/(1+eta)^n
  F_DK,       // B with sharper bracket (1-eta)/(k+eta)^n and 1/k^(n-1)
  G_RATHER,   // rational A
  H_RATHER,   // rational B
  I_RATHER,   // rational C
  J_RATHER,   // rational D with 1/k^(n-1)
  T1_NEW,     // rational E
  T2_NEW,     // rational F
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::E2_MAXMOD, TheoremId::E1_VARGA, TheoremId::A_RIVLIN, TheoremId::B_AZIZ,
    TheoremId::C_KM,      TheoremId::D_KM,     TheoremId::E_DK,     TheoremId::F_DK,
    TheoremId::G_RATHER,  TheoremId::H_RATHER, TheoremId::I_RATHER, TheoremId::J_RATHER,
    TheoremId::T1_NEW,    TheoremId::T2_NEW,
};

constexpr bool is_rational_theorem(TheoremId id) {
  switch (id) {
    case TheoremId::G_RATHER:
    case TheoremId::H_RATHER:
    case TheoremId::I_RATHER:
    case TheoremId::J_RATHER:
    case TheoremId::T1_NEW:
    case TheoremId::T2_NEW:
      return true;
    default:
      return false;
  }
}

constexpr bool is_polynomial_theorem(TheoremId id) { return !is_rational_theorem(id); }

/// Bounds whose bracket involves |alpha_0| and |alpha_n|.
constexpr bool uses_coefficients(TheoremId id) {
  switch (id) {
    case TheoremId::C_KM:
    case TheoremId::D_KM:
    case TheoremId::E_DK:
    case TheoremId::F_DK:
    case TheoremId::I_RATHER:
    case TheoremId::J_RATHER:
    case TheoremId::T1_NEW:
    case TheoremId::T2_NEW:
      return true;
    default:
      return false;
  }
}

/// Bounds whose hypothesis and base factor use the zero-exclusion radius k.
constexpr bool uses_k(TheoremId id) {
  switch (id) {
    case TheoremId::B_AZIZ:
    case TheoremId::D_KM:
    case TheoremId::F_DK:
    case TheoremId::H_RATHER:
    case TheoremId::J_RATHER:
    case TheoremId::T2_NEW:
      return true;
    default:
      return false;
  }
}

constexpr bool is_upper_bound(TheoremId id) { return id == TheoremId::E2_MAXMOD; }

/// Bounds stated for circle maxima rather than pointwise on |z|=1.
constexpr bool is_maxnorm_theorem(TheoremId id) {
  return id == TheoremId::E2_MAXMOD || id == TheoremId::E1_VARGA;
}

constexpr std::string_view theorem_tag(TheoremId id) {
  switch (id) {
    case TheoremId::E2_MAXMOD: return "e2max";
    case TheoremId::E1_VARGA: return "e1varga";
    case TheoremId::A_RIVLIN: return "tA";
    case TheoremId::B_AZIZ: return "tB";
    case TheoremId::C_KM: return "tC";
    case TheoremId::D_KM: return "tD";
    case TheoremId::E_DK: return "tE";
    case TheoremId::F_DK: return "tF";
    case TheoremId::G_RATHER: return "tG";
    case TheoremId::H_RATHER: return "tH";
    case TheoremId::I_RATHER: return "tI";
    case TheoremId::J_RATHER: return "tJ";
    case TheoremId::T1_NEW: return "t1";
    case TheoremId::T2_NEW: return "t2";
  }
  return "?";
}

inline std::optional<TheoremId> theorem_from_tag(std::string_view tag) {
  for (TheoremId id : kAllTheorems)
    if (theorem_tag(id) == tag) return id;
  return std::nullopt;
}

/// Scalar parameters of the bounds: eta is the shrink radius, k the
/// zero-exclusion radius, nu the growth radius of the max-modulus bound.
template <typename Scalar>
struct BoundParams {
  Scalar eta = Scalar(0);
  Scalar k = Scalar(1);
  Scalar nu = Scalar(1);

  void validate() const {
    if (!(eta >= Scalar(0) && eta <= Scalar(1))) throw DomainError("BoundParams: eta must lie in [0,1]");
    if (!(k >= Scalar(1))) throw DomainError("BoundParams: k must be >= 1");
    if (!(nu >= Scalar(1))) throw DomainError("BoundParams: nu must be >= 1");
  }
};

/// Result of a factor evaluation: value is the full multiplicative factor,
/// correction_term the additive sharpening inside the bracket (0 when the
/// bound has none), so value = base * (1 + correction_term) with base
/// including the pole product for rational bounds.
template <typename Scalar>
struct BoundFactor {
  Scalar value = Scalar(0);
  TheoremId theorem = TheoremId::A_RIVLIN;
  BoundParams<Scalar> params;
  Scalar correction_term = Scalar(0);
  bool upper_bound = false;
  // Set when |alpha_0| < |alpha_n| k^n, i.e. the zero-location hypothesis
  // cannot hold for these coefficients; the factor value is still returned.
  bool hypothesis_warning = false;
};

/// x^n by binary exponentiation; bit-reproducible for integer exponents.
template <typename Scalar>
Scalar ipow(Scalar x, unsigned n) {
  Scalar acc = Scalar(1);
  while (n != 0) {
    if (n & 1u) acc *= x;
    x *= x;
    n >>= 1;
  }
  return acc;
}

namespace detail {

/// Threshold above which products switch to log-space accumulation; pole
/// products shrink geometrically and underflow for large n.
inline constexpr Eigen::Index kLogSpaceThreshold = 32;

template <typename Scalar>
Scalar product(const RealArray<Scalar>& factors) {
  if (factors.size() > kLogSpaceThreshold) return std::exp(factors.log().sum());
  Scalar acc = Scalar(1);
  for (Eigen::Index j = 0; j < factors.size(); ++j) acc *= factors[j];
  return acc;
}

template <typename Scalar>
Scalar product(std::span<const Scalar> factors) {
  RealArray<Scalar> a = Eigen::Map<const RealArray<Scalar>>(factors.data(), static_cast<Eigen::Index>(factors.size()));
  return product<Scalar>(a);
}

}  // namespace detail

/// prod_j (|beta_j| - 1)/(|beta_j| + eta), the factor the prescribed poles
/// contribute to every rational bound. Lies in (0,1) when all |beta_j| > 1.
template <typename Scalar>
Scalar pole_product(const PoleSet<Scalar>& poles, Scalar eta) {
  const RealArray<Scalar> mods = poles.moduli();
  for (Eigen::Index j = 0; j < mods.size(); ++j) {
    if (!(mods[j] > Scalar(1)))
      throw PoleOnCircle("pole_product: |beta_" + std::to_string(j) + "| <= 1");
  }
  const RealArray<Scalar> factors = (mods - Scalar(1)) / (mods + eta);
  return detail::product<Scalar>(factors);
}

/// prod_j (eta_j + eta)/(eta_j + 1), the exact left side of Lemmas 1 and 2.
template <typename Scalar>
Scalar product_lhs(Scalar eta, std::span<const Scalar> root_moduli) {
  RealArray<Scalar> mods =
      Eigen::Map<const RealArray<Scalar>>(root_moduli.data(), static_cast<Eigen::Index>(root_moduli.size()));
  for (Eigen::Index j = 0; j < mods.size(); ++j)
    if (!(mods[j] > Scalar(0))) throw DomainError("product_lhs: eta_j must be positive");
  const RealArray<Scalar> factors = (mods + eta) / (mods + Scalar(1));
  return detail::product<Scalar>(factors);
}

/// Right side of Lemma 1:
/// ((eta+1)/2)^n [1 + (prod eta_j - 1)(1-eta) / ((prod eta_j + 1)(eta+1)^n)].
template <typename Scalar>
Scalar lemma1_rhs(Scalar eta, std::span<const Scalar> root_moduli) {
  if (!(eta >= Scalar(0) && eta <= Scalar(1))) throw DomainError("lemma1_rhs: eta must lie in [0,1]");
  for (std::size_t j = 0; j < root_moduli.size(); ++j)
    if (!(root_moduli[j] >= Scalar(1))) throw DomainError("lemma1_rhs: every eta_j must be >= 1");
  if (root_moduli.empty()) return Scalar(1);
  const unsigned n = static_cast<unsigned>(root_moduli.size());
  const Scalar prod = detail::product<Scalar>(root_moduli);
  const Scalar base = ipow((eta + Scalar(1)) / Scalar(2), n);
  const Scalar bracket =
      Scalar(1) + (prod - Scalar(1)) * (Scalar(1) - eta) / ((prod + Scalar(1)) * ipow(eta + Scalar(1), n));
  return base * bracket;
}

/// Right side of Lemma 2:
/// ((k+eta)/(k+1))^n [1 + (1/k^(n-1)) ((1-eta)/(k+eta)^n) (prod eta_j - k^n)/(prod eta_j + 1)].
template <typename Scalar>
Scalar lemma2_rhs(Scalar eta, Scalar k, std::span<const Scalar> root_moduli) {
  if (!(eta >= Scalar(0) && eta <= Scalar(1))) throw DomainError("lemma2_rhs: eta must lie in [0,1]");
  if (!(k >= Scalar(1))) throw DomainError("lemma2_rhs: k must be >= 1");
  for (std::size_t j = 0; j < root_moduli.size(); ++j)
    if (!(root_moduli[j] >= k)) throw DomainError("lemma2_rhs: every eta_j must be >= k");
  if (root_moduli.empty()) return Scalar(1);
  const unsigned n = static_cast<unsigned>(root_moduli.size());
  const Scalar prod = detail::product<Scalar>(root_moduli);
  const Scalar base = ipow((k + eta) / (k + Scalar(1)), n);
  const Scalar bracket = Scalar(1) + (Scalar(1) / ipow(k, n - 1)) * ((Scalar(1) - eta) / ipow(k + eta, n)) *
                                         (prod - ipow(k, n)) / (prod + Scalar(1));
  return base * bracket;
}

namespace detail {

/// Coefficient bracket correction of the named bound; 0 when it has none.
/// Requires coefficient moduli for the bounds that use them.
template <typename Scalar>
Scalar correction_term(TheoremId id, const BoundParams<Scalar>& p, unsigned n,
                       const std::optional<CoeffModuli<Scalar>>& cm) {
  if (!uses_coefficients(id)) return Scalar(0);
  if (!cm) throw DomainError(std::string("factor: theorem ") + std::string(theorem_tag(id)) +
                             " needs coefficient moduli a0, an");
  const Scalar a0 = cm->a0, an = cm->an;
  const Scalar eta = p.eta;
  switch (id) {
    case TheoremId::C_KM:
    case TheoremId::I_RATHER:
      return (a0 - an) / (a0 + an) * ipow((Scalar(1) - eta) / (Scalar(1) + eta), n);
    case TheoremId::D_KM:
      return (a0 - an * ipow(p.k, n)) / (a0 + an) * ipow((Scalar(1) - eta) / (p.k + eta), n);
    case TheoremId::J_RATHER:
      return (Scalar(1) / ipow(p.k, n - 1)) * (a0 - an * ipow(p.k, n)) / (a0 + an) *
             ipow((Scalar(1) - eta) / (p.k + eta), n);
    case TheoremId::E_DK:
    case TheoremId::T1_NEW:
      return (a0 - an) / (a0 + an) * (Scalar(1) - eta) / ipow(Scalar(1) + eta, n);
    case TheoremId::F_DK:
    case TheoremId::T2_NEW:
      return (Scalar(1) / ipow(p.k, n - 1)) * (a0 - an * ipow(p.k, n)) / (a0 + an) * (Scalar(1) - eta) /
             ipow(p.k + eta, n);
    default:
      return Scalar(0);
  }
}

template <typename Scalar>
Scalar base_power(TheoremId id, const BoundParams<Scalar>& p, unsigned n) {
  switch (id) {
    case TheoremId::E2_MAXMOD:
      return ipow(p.nu, n);
    case TheoremId::E1_VARGA:
      return ipow(p.eta, n);
    case TheoremId::A_RIVLIN:
    case TheoremId::C_KM:
    case TheoremId::E_DK:
    case TheoremId::G_RATHER:
    case TheoremId::I_RATHER:
    case TheoremId::T1_NEW:
      return ipow((Scalar(1) + p.eta) / Scalar(2), n);
    case TheoremId::B_AZIZ:
    case TheoremId::D_KM:
    case TheoremId::F_DK:
    case TheoremId::H_RATHER:
    case TheoremId::J_RATHER:
    case TheoremId::T2_NEW:
      return ipow((p.k + p.eta) / (p.k + Scalar(1)), n);
  }
  return Scalar(0);
}

template <typename Scalar>
bool warn_hypothesis(TheoremId id, const BoundParams<Scalar>& p, unsigned n,
                     const std::optional<CoeffModuli<Scalar>>& cm) {
  if (!uses_coefficients(id) || !cm) return false;
  const Scalar keff = uses_k(id) ? p.k : Scalar(1);
  return cm->a0 < cm->an * ipow(keff, n);
}

}  // namespace detail

/// Closed-form factor of a polynomial growth bound. Coefficient moduli are
/// required only by the coefficient-sharpened bounds (tC, tD, tE, tF).
template <typename Scalar>
BoundFactor<Scalar> factor_polynomial(TheoremId id, const BoundParams<Scalar>& params, unsigned n,
                                      std::type_identity_t<std::optional<CoeffModuli<Scalar>>> coeffs =
                                          std::nullopt) {
  if (!is_polynomial_theorem(id))
    throw DomainError(std::string("factor_polynomial: ") + std::string(theorem_tag(id)) +
                      " is a rational-function bound");
  if (n == 0) throw DomainError("factor_polynomial: n must be >= 1");
  params.validate();
  BoundFactor<Scalar> out;
  out.theorem = id;
  out.params = params;
  out.upper_bound = is_upper_bound(id);
  out.correction_term = detail::correction_term(id, params, n, coeffs);
  out.hypothesis_warning = detail::warn_hypothesis(id, params, n, coeffs);
  out.value = detail::base_power(id, params, n) * (Scalar(1) + out.correction_term);
  return out;
}

/// Closed-form factor of a rational growth bound, pole product included.
/// n must equal the pole count.
template <typename Scalar>
BoundFactor<Scalar> factor_rational(TheoremId id, const BoundParams<Scalar>& params, unsigned n,
                                    std::type_identity_t<std::optional<CoeffModuli<Scalar>>> coeffs,
                                    const PoleSet<Scalar>& poles) {
  if (!is_rational_theorem(id))
    throw DomainError(std::string("factor_rational: ") + std::string(theorem_tag(id)) +
                      " is a polynomial bound");
  if (n == 0) throw DomainError("factor_rational: n must be >= 1");
  if (static_cast<Eigen::Index>(n) != poles.size())
    throw DomainError("factor_rational: n must equal the number of poles");
  params.validate();
  BoundFactor<Scalar> out;
  out.theorem = id;
  out.params = params;
  out.correction_term = detail::correction_term(id, params, n, coeffs);
  out.hypothesis_warning = detail::warn_hypothesis(id, params, n, coeffs);
  out.value =
      detail::base_power(id, params, n) * pole_product(poles, params.eta) * (Scalar(1) + out.correction_term);
  return out;
}

using BoundParamsd = BoundParams<double>;
using BoundFactord = BoundFactor<double>;
using CoeffModulid = CoeffModuli<double>;

}  // namespace ratgrow

#endif  // RATGROW_BOUNDS_HPP
