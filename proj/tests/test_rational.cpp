#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ratgrow/rational.hpp"

using namespace ratgrow;
using C = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexVectord cvec(std::initializer_list<C> xs) {
  ComplexVectord v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (C x : xs) v[i++] = x;
  return v;
}

RationalFunctiond z_plus_1_over_z_minus_2() {
  return RationalFunctiond(Polynomiald(cvec({C(1, 0), C(1, 0)})), PoleSetd(cvec({C(2, 0)})));
}

}  // namespace

TEST_CASE("w_eval") {
  CHECK(w_eval(PoleSetd(cvec({C(2, 0)})), C(1, 0)) == C(-1, 0));
  CHECK(w_eval(PoleSetd(cvec({C(2, 0), C(2, 0)})), C(0, 0)) == C(4, 0));
  CHECK(w_eval(PoleSetd(cvec({C(0, 3)})), C(0, 0)) == C(0, -3));
  CHECK(w_eval(PoleSetd(ComplexVectord(0)), C(5, 5)) == C(1, 0));
}

TEST_CASE("blaschke_eval hand value and pole hit") {
  CHECK(std::abs(blaschke_eval(PoleSetd(cvec({C(2, 0)})), C(1, 0)) - C(1, 0)) <= 1e-15);
  CHECK_THROWS_AS((void)blaschke_eval(PoleSetd(cvec({C(2, 0)})), C(2, 0)), PoleHit);
}

TEST_CASE("blaschke product is unimodular on the unit circle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> mod(1.05, 10.0), ang(0.0, kTwoPi);
  std::uniform_int_distribution<int> count(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = count(rng);
    ComplexVectord poles(n);
    for (int j = 0; j < n; ++j) poles[j] = std::polar(mod(rng), ang(rng));
    const PoleSetd ps(poles);
    for (int a = 0; a < 64; ++a) {
      const double m = std::abs(blaschke_eval(ps, std::polar(1.0, ang(rng))));
      CHECK(m >= 1.0 - 1e-10);
      CHECK(m <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("rat_eval") {
  const auto r = z_plus_1_over_z_minus_2();
  CHECK(std::abs(rat_eval(r, C(1, 0)) - C(-2, 0)) <= 1e-15);
  CHECK(std::abs(rat_eval(r, C(-1, 0))) <= 1e-15);
  CHECK_THROWS_AS((void)rat_eval(r, C(2, 0)), PoleHit);
}

TEST_CASE("rat_eval equals numerator over w by construction") {
  const auto r = z_plus_1_over_z_minus_2();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 64; ++i) {
    const C z(u(rng), u(rng));
    if (std::abs(z - C(2, 0)) < 1e-6) continue;
    const C direct = r.numerator()(z) / w_eval(r.poles(), z);
    const C via = rat_eval(r, z);
    CHECK(via.real() == direct.real());
    CHECK(via.imag() == direct.imag());
  }
}

TEST_CASE("numerator degree must not exceed pole count") {
  CHECK_THROWS_AS(RationalFunctiond(Polynomiald(cvec({C(1, 0), C(1, 0), C(1, 0)})), PoleSetd(cvec({C(2, 0)}))),
                  DomainError);
}

TEST_CASE("validate_instance") {
  SUBCASE("accepts when all constraints met") {
    RootFormd rf{C(1, 0), cvec({C(1, 0), C(2.5, 0)})};
    const auto out = validate_instance(rf, PoleSetd(cvec({C(1.5, 0)})), ZeroConstraint(1.0), 0.05);
    CHECK(out.accepted);
    CHECK(out.violations.empty());
  }
  SUBCASE("rejects root inside the exclusion disk") {
    RootFormd rf{C(1, 0), cvec({C(0.9, 0)})};
    const auto out = validate_instance(rf, PoleSetd(cvec({C(2, 0)})), ZeroConstraint(1.0), 0.05);
    CHECK_FALSE(out.accepted);
    REQUIRE(out.violations.size() == 1);
    CHECK(out.violations[0].kind == InstanceViolation::Kind::RootInsideExclusion);
    CHECK(out.violations[0].index == 0);
    CHECK(out.violations[0].modulus == doctest::Approx(0.9));
  }
  SUBCASE("rejects pole below the margin") {
    RootFormd rf{C(1, 0), cvec({C(2, 0)})};
    const auto out = validate_instance(rf, PoleSetd(cvec({C(1.01, 0)})), ZeroConstraint(1.0), 0.05);
    CHECK_FALSE(out.accepted);
    REQUIRE(out.violations.size() == 1);
    CHECK(out.violations[0].kind == InstanceViolation::Kind::PoleMarginViolation);
    CHECK(out.violations[0].limit == doctest::Approx(1.05));
  }
  SUBCASE("k below 1 is rejected") { CHECK_THROWS_AS(ZeroConstraint(0.5), DomainError); }
}

TEST_CASE("validate_poles stands alone") {
  CHECK(validate_poles(PoleSetd(cvec({C(1.05, 0), C(-3, 0)})), 0.05).accepted);
  const auto out = validate_poles(PoleSetd(cvec({C(2, 0), C(0, 1.02)})), 0.05);
  CHECK_FALSE(out.accepted);
  REQUIRE(out.violations.size() == 1);
  CHECK(out.violations[0].kind == InstanceViolation::Kind::PoleMarginViolation);
  CHECK(out.violations[0].index == 1);
  CHECK(out.violations[0].modulus == doctest::Approx(1.02));
  // relaxing the margin admits the same set
  CHECK(validate_poles(PoleSetd(cvec({C(2, 0), C(0, 1.02)})), 0.0).accepted);
}

TEST_CASE("pole distance ratio never drops below (|b|-1)/(|b|+eta)") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> mod(1.0001, 20.0), ang(0.0, kTwoPi), etau(0.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    const C beta = std::polar(mod(rng), ang(rng));
    const double eta = etau(rng);
    const C z = std::polar(1.0, ang(rng));
    const double lhs = std::abs(z - beta) / std::abs(eta * z - beta);
    const double rhs = (std::abs(beta) - 1.0) / (std::abs(beta) + eta);
    CHECK(lhs >= rhs - 1e-12);
  }
}
