#ifndef RATGROW_COMPLEX_POLY_HPP
#define RATGROW_COMPLEX_POLY_HPP

#include <Eigen/Dense>

#include <complex>
#include <utility>

#include "ratgrow/errors.hpp"

namespace ratgrow {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Dense column vector of complex scalars; index j holds the coefficient of z^j
/// (or the j-th root / pole, depending on context).
template <typename Scalar>
using ComplexVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexArray = Eigen::Array<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Relative tolerance used for "degree exactly n" decisions: a coefficient is
/// degenerate when its modulus is <= tol * (max coefficient modulus).
inline constexpr double kDegeneracyTol = 1e-12;

/// Univariate polynomial with complex coefficients, coeffs[j] = coefficient
/// of z^j. Immutable after construction.
template <typename Scalar>
class Polynomial {
 public:
  explicit Polynomial(ComplexVector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw DomainError("Polynomial: coefficient vector must be non-empty");
  }

  const ComplexVector<Scalar>& coeffs() const { return coeffs_; }

  /// Highest coefficient index stored, regardless of degeneracy.
  Eigen::Index nominal_degree() const { return coeffs_.size() - 1; }

  Scalar max_coeff_modulus() const { return coeffs_.array().abs().maxCoeff(); }

  /// Highest index whose coefficient modulus exceeds the degeneracy tolerance
  /// relative to the largest coefficient; 0 for the (near-)zero polynomial.
  Eigen::Index degree(Scalar tol = Scalar(kDegeneracyTol)) const {
    const Scalar cut = tol * max_coeff_modulus();
    for (Eigen::Index j = coeffs_.size() - 1; j > 0; --j) {
      if (std::abs(coeffs_[j]) > cut) return j;
    }
    return 0;
  }

  /// Horner evaluation at a single point.
  Complex<Scalar> operator()(Complex<Scalar> z) const {
    Complex<Scalar> acc = coeffs_[coeffs_.size() - 1];
    for (Eigen::Index j = coeffs_.size() - 2; j >= 0; --j) acc = acc * z + coeffs_[j];
    return acc;
  }

  /// Horner evaluation at an array of points. One array pass per coefficient,
  /// same operation order per element as the scalar overload.
  ComplexArray<Scalar> operator()(const ComplexArray<Scalar>& z) const {
    ComplexArray<Scalar> acc = ComplexArray<Scalar>::Constant(z.size(), coeffs_[coeffs_.size() - 1]);
    for (Eigen::Index j = coeffs_.size() - 2; j >= 0; --j) acc = acc * z + coeffs_[j];
    return acc;
  }

 private:
  ComplexVector<Scalar> coeffs_;
};

/// Factored representation leading * prod_j (z - roots[j]); roots are stored
/// as complex points, their moduli are the eta_j of the growth bounds.
template <typename Scalar>
struct RootForm {
  Complex<Scalar> leading;
  ComplexVector<Scalar> roots;

  RealArray<Scalar> root_moduli() const { return roots.array().abs(); }
};

/// Expands leading * prod (z - r_j) by sequential linear-factor convolution,
/// O(n^2), stable for the supported n <= 64.
template <typename Scalar>
Polynomial<Scalar> poly_from_roots(Complex<Scalar> leading, const ComplexVector<Scalar>& roots) {
  ComplexVector<Scalar> c = ComplexVector<Scalar>::Zero(roots.size() + 1);
  c[0] = leading;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    // multiply by (z - r): new c[j] = c[j-1] - r*c[j]
    for (Eigen::Index j = i + 1; j > 0; --j) c[j] = c[j - 1] - roots[i] * c[j];
    c[0] = -roots[i] * c[0];
  }
  return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> expand(const RootForm<Scalar>& rf) {
  return poly_from_roots(rf.leading, rf.roots);
}

template <typename Scalar>
Complex<Scalar> poly_eval(const Polynomial<Scalar>& p, Complex<Scalar> z) {
  return p(z);
}

/// Moduli of the constant and the leading coefficient, (|a0|, |an|).
template <typename Scalar>
struct CoeffModuli {
  Scalar a0;
  Scalar an;
};

/// Reads (|alpha_0|, |alpha_n|) at the effective degree. When required_degree
/// is non-negative the effective degree must equal it, otherwise the
/// coefficient-based bounds are inapplicable and DegenerateLeading is thrown.
template <typename Scalar>
CoeffModuli<Scalar> poly_coeff_moduli(const Polynomial<Scalar>& p, Eigen::Index required_degree = -1) {
  const Eigen::Index n = p.degree();
  if (required_degree >= 0 && n != required_degree)
    throw DegenerateLeading("poly_coeff_moduli: effective degree " + std::to_string(n) +
                            " does not match required degree " + std::to_string(required_degree));
  return {std::abs(p.coeffs()[0]), std::abs(p.coeffs()[n])};
}

using Polynomiald = Polynomial<double>;
using RootFormd = RootForm<double>;
using Complexd = Complex<double>;
using ComplexVectord = ComplexVector<double>;
using ComplexArrayd = ComplexArray<double>;
using RealArrayd = RealArray<double>;

}  // namespace ratgrow

#endif  // RATGROW_COMPLEX_POLY_HPP
