#ifndef RATGROW_RATIONAL_HPP
#define RATGROW_RATIONAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "ratgrow/complex_poly.hpp"
#include "ratgrow/errors.hpp"

namespace ratgrow {

/// Absolute distance below which an evaluation point counts as hitting a pole.
inline constexpr double kPoleHitTol = 1e-14;

/// Default modulus margin above the unit circle required of generated and
/// validated poles; keeps bound factors and circle ratios well-conditioned.
inline constexpr double kDefaultPoleMargin = 0.05;

/// Prescribed poles beta_1..beta_n. Plain data; the |beta_j| > 1 requirement
/// is enforced by validate_instance (margin policy) and by the operations
/// that are undefined on or inside the circle.
template <typename Scalar>
class PoleSet {
 public:
  PoleSet() = default;
  explicit PoleSet(ComplexVector<Scalar> poles) : poles_(std::move(poles)) {}

  Eigen::Index size() const { return poles_.size(); }
  const ComplexVector<Scalar>& values() const { return poles_; }
  Complex<Scalar> operator[](Eigen::Index j) const { return poles_[j]; }
  RealArray<Scalar> moduli() const { return poles_.array().abs(); }

 private:
  ComplexVector<Scalar> poles_;
};

/// w(z) = prod_j (z - beta_j); the empty product is 1.
template <typename Scalar>
Complex<Scalar> w_eval(const PoleSet<Scalar>& poles, Complex<Scalar> z) {
  Complex<Scalar> acc(Scalar(1), Scalar(0));
  for (Eigen::Index j = 0; j < poles.size(); ++j) acc *= z - poles[j];
  return acc;
}

template <typename Scalar>
ComplexArray<Scalar> w_eval(const PoleSet<Scalar>& poles, const ComplexArray<Scalar>& z) {
  ComplexArray<Scalar> acc = ComplexArray<Scalar>::Constant(z.size(), Complex<Scalar>(1, 0));
  for (Eigen::Index j = 0; j < poles.size(); ++j) acc *= z - poles[j];
  return acc;
}

/// B(z) = prod_j (1 - conj(beta_j) z)/(z - beta_j); unimodular on |z| = 1.
template <typename Scalar>
Complex<Scalar> blaschke_eval(const PoleSet<Scalar>& poles, Complex<Scalar> z) {
  Complex<Scalar> acc(Scalar(1), Scalar(0));
  for (Eigen::Index j = 0; j < poles.size(); ++j) {
    const Complex<Scalar> d = z - poles[j];
    if (std::abs(d) <= Scalar(kPoleHitTol))
      throw PoleHit("blaschke_eval: z coincides with pole " + std::to_string(j));
    acc *= (Scalar(1) - std::conj(poles[j]) * z) / d;
  }
  return acc;
}

/// r(z) = f(z)/w(z) with deg f <= number of poles.
template <typename Scalar>
class RationalFunction {
 public:
  RationalFunction(Polynomial<Scalar> numerator, PoleSet<Scalar> poles)
      : numerator_(std::move(numerator)), poles_(std::move(poles)) {
    if (numerator_.nominal_degree() > poles_.size())
      throw DomainError("RationalFunction: numerator degree exceeds pole count");
  }

  const Polynomial<Scalar>& numerator() const { return numerator_; }
  const PoleSet<Scalar>& poles() const { return poles_; }
  Eigen::Index pole_count() const { return poles_.size(); }

 private:
  Polynomial<Scalar> numerator_;
  PoleSet<Scalar> poles_;
};

template <typename Scalar>
Complex<Scalar> rat_eval(const RationalFunction<Scalar>& r, Complex<Scalar> z) {
  for (Eigen::Index j = 0; j < r.pole_count(); ++j) {
    if (std::abs(z - r.poles()[j]) <= Scalar(kPoleHitTol))
      throw PoleHit("rat_eval: z coincides with pole " + std::to_string(j));
  }
  return r.numerator()(z) / w_eval(r.poles(), z);
}

/// Zero-exclusion hypothesis: the numerator has no zeros in |z| < k.
struct ZeroConstraint {
  double k = 1.0;

  explicit ZeroConstraint(double k_) : k(k_) {
    if (!(k >= 1.0)) throw DomainError("ZeroConstraint: k must be >= 1");
  }
};

struct InstanceViolation {
  enum class Kind { RootInsideExclusion, PoleMarginViolation };
  Kind kind;
  Eigen::Index index;
  double modulus;
  double limit;
};

struct ValidationOutcome {
  bool accepted = true;
  std::vector<InstanceViolation> violations;
};

/// Pole half of the hypothesis check: every pole modulus >= 1 + margin.
/// Usable on its own when the numerator roots are unknown.
template <typename Scalar>
ValidationOutcome validate_poles(const PoleSet<Scalar>& poles, double pole_margin = kDefaultPoleMargin) {
  ValidationOutcome out;
  for (Eigen::Index j = 0; j < poles.size(); ++j) {
    const double m = std::abs(poles[j]);
    if (m < 1.0 + pole_margin) {
      out.accepted = false;
      out.violations.push_back({InstanceViolation::Kind::PoleMarginViolation, j, m, 1.0 + pole_margin});
    }
  }
  return out;
}

/// Checks the hypotheses shared by the growth theorems: every numerator root
/// modulus >= k (slack 1e-12 for roundoff) and every pole modulus >= 1 + margin.
template <typename Scalar>
ValidationOutcome validate_instance(const RootForm<Scalar>& numerator_roots, const PoleSet<Scalar>& poles,
                                    const ZeroConstraint& constraint,
                                    double pole_margin = kDefaultPoleMargin) {
  ValidationOutcome out = validate_poles(poles, pole_margin);
  for (Eigen::Index j = 0; j < numerator_roots.roots.size(); ++j) {
    const double m = std::abs(numerator_roots.roots[j]);
    if (m < constraint.k - 1e-12) {
      out.accepted = false;
      out.violations.push_back({InstanceViolation::Kind::RootInsideExclusion, j, m, constraint.k});
    }
  }
  return out;
}

using PoleSetd = PoleSet<double>;
using RationalFunctiond = RationalFunction<double>;

}  // namespace ratgrow

#endif  // RATGROW_RATIONAL_HPP
