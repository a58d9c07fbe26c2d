#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ratgrow/campaign.hpp"
#include "ratgrow/report.hpp"

using namespace ratgrow;
using C = std::complex<double>;

namespace {

ComplexVectord cvec(std::initializer_list<C> xs) {
  ComplexVectord v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (C x : xs) v[i++] = x;
  return v;
}

BoundParamsd params(double eta, double k = 1.0) {
  BoundParamsd p;
  p.eta = eta;
  p.k = k;
  return p;
}

Instance coeff_instance(int n, std::initializer_list<C> coeffs, std::initializer_list<C> poles) {
  return Instance{n, Polynomiald(cvec(coeffs)), std::nullopt, PoleSetd(cvec(poles)), std::nullopt};
}

}  // namespace

TEST_CASE("fuzz_campaign finds no counterexamples for t1") {
  GeneratorConfig cfg;
  cfg.n = 3;
  cfg.seed = 41;
  const std::vector<double> etas{0.0, 0.5, 1.0};
  const auto rep = fuzz_campaign(TheoremId::T1_NEW, cfg, 40, etas, CircleGrid{256, 40});
  CHECK(rep.checks == 120);
  CHECK(rep.passes == 120);
  CHECK(rep.failures == 0);
  CHECK(rep.errors == 0);
  CHECK(rep.hypothesis_unmet == 0);
  CHECK(rep.min_slack >= -1e-12);
  REQUIRE(rep.per_eta.size() == 3);
  long sum = 0;
  for (const auto& e : rep.per_eta) {
    sum += e.checked;
    CHECK(e.failures == 0);
    CHECK(e.min_slack >= -1e-12);
    CHECK(e.mean_slack >= e.min_slack);
  }
  CHECK(sum == rep.checks);
  REQUIRE(rep.witness.has_value());
  REQUIRE(rep.witness_report.has_value());
  CHECK(rep.min_slack_trial >= 0);
  CHECK(rep.min_slack_eta_index >= 0);
  CHECK(instance_digest(*rep.witness) == rep.witness_report->instance_digest);
  CHECK(rep.witness_report->slack == doctest::Approx(rep.min_slack).epsilon(1e-15));
}

TEST_CASE("fuzz_campaign witness reproduces a direct verification") {
  GeneratorConfig cfg;
  cfg.n = 2;
  cfg.k = 2.0;
  cfg.seed = 4242;
  const std::vector<double> etas{0.3};
  const auto rep = fuzz_campaign(TheoremId::T2_NEW, cfg, 1, etas, CircleGrid{256, 40});
  REQUIRE(rep.witness.has_value());
  const auto direct =
      verify_theorem(TheoremId::T2_NEW, generate_instance(cfg, 0), params(0.3, 2.0), CircleGrid{256, 40},
                     cfg.pole_margin);
  CHECK(rep.witness_report->factor == direct.factor);
  CHECK(rep.witness_report->min_observed == direct.min_observed);
  CHECK(rep.witness_report->slack == direct.slack);
  CHECK(rep.witness_report->instance_digest == direct.instance_digest);
}

TEST_CASE("fuzz_campaign output is byte-deterministic") {
  GeneratorConfig cfg;
  cfg.n = 2;
  cfg.seed = 7;
  const std::vector<double> etas{0.0, 0.25};
  const auto a = fuzz_campaign(TheoremId::T1_NEW, cfg, 10, etas, CircleGrid{128, 30});
  const auto b = fuzz_campaign(TheoremId::T1_NEW, cfg, 10, etas, CircleGrid{128, 30});
  CHECK(dump_canonical(to_json(a)) == dump_canonical(to_json(b)));
}

TEST_CASE("compare_factors on the 2-pole reference instance") {
  const auto inst = coeff_instance(2, {C(4, 0), C(0, 0), C(1, 0)}, {C(2, 0), C(2, 0)});
  const std::vector<TheoremId> ids{TheoremId::T1_NEW, TheoremId::I_RATHER, TheoremId::G_RATHER};
  const auto tab = compare_factors(ids, inst, {0.0, 0.5}, params(0.0));
  REQUIRE(tab.entries.size() == 6);
  CHECK(tab.orderings_ok);

  // eta-major layout: first three entries belong to eta = 0
  CHECK(tab.entries[0].theorem == TheoremId::T1_NEW);
  CHECK(tab.entries[0].factor == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(tab.entries[1].factor == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(tab.entries[2].factor == doctest::Approx(0.0625).epsilon(1e-14));

  CHECK(tab.entries[3].factor == doctest::Approx(0.102).epsilon(1e-14));
  CHECK(tab.entries[4].factor == doctest::Approx(0.096).epsilon(1e-14));
  CHECK(tab.entries[5].factor == doctest::Approx(0.09).epsilon(1e-14));

  REQUIRE(tab.orderings.size() == 2);
  CHECK(tab.orderings[0].eta == 0.0);
  CHECK(tab.orderings[0].ok);
  CHECK_FALSE(tab.orderings[0].strict_expected);  // strictness only claimed for 0 < eta < 1
  CHECK(tab.orderings[1].strict_expected);
  CHECK(tab.orderings[1].strict_ok);
  CHECK(tab.orderings[1].min_margin > 0.0);
}

TEST_CASE("compare_factors second chain with k") {
  const auto inst = coeff_instance(2, {C(9, 0), C(0, 0), C(1, 0)}, {C(3, 0), C(3, 0)});
  const std::vector<TheoremId> ids{TheoremId::T2_NEW, TheoremId::J_RATHER, TheoremId::H_RATHER};
  const auto tab = compare_factors(ids, inst, {0.25, 0.75}, params(0.0, 2.0));
  CHECK(tab.orderings_ok);
  REQUIRE(tab.orderings.size() == 2);
  for (const auto& oc : tab.orderings) {
    CHECK(oc.chain == "t2>=tJ>=tH");
    CHECK(oc.ok);
    CHECK(oc.strict_expected);  // a0 = 9 > an k^n = 4
    CHECK(oc.strict_ok);
  }
}

TEST_CASE("compare_factors with equal extreme coefficients collapses the chain") {
  const auto inst = coeff_instance(2, {C(1, 0), C(0, 0), C(1, 0)}, {C(2, 0), C(2, 0)});
  const std::vector<TheoremId> ids{TheoremId::T1_NEW, TheoremId::I_RATHER, TheoremId::G_RATHER};
  const auto tab = compare_factors(ids, inst, {0.5}, params(0.0));
  REQUIRE(tab.orderings.size() == 1);
  CHECK(tab.orderings[0].ok);
  CHECK_FALSE(tab.orderings[0].strict_expected);
  CHECK(std::abs(tab.orderings[0].min_margin) <= 1e-14);
  CHECK(tab.entries[0].factor == doctest::Approx(tab.entries[2].factor).epsilon(1e-14));
}

TEST_CASE("compare_factors without a complete chain emits no ordering rows") {
  const auto inst = coeff_instance(1, {C(2, 0), C(1, 0)}, {C(2, 0)});
  const auto tab =
      compare_factors({TheoremId::T1_NEW, TheoremId::G_RATHER}, inst, {0.5}, params(0.0));
  CHECK(tab.orderings.empty());
  CHECK(tab.orderings_ok);
  CHECK(tab.entries.size() == 2);
}

TEST_CASE("compare_factors rejects polynomial ids on a pole-carrying instance") {
  const auto inst = coeff_instance(1, {C(2, 0), C(1, 0)}, {C(2, 0)});
  CHECK_THROWS_AS((void)compare_factors({TheoremId::A_RIVLIN}, inst, {0.5}, params(0.0)), DomainError);
}

TEST_CASE("lemma_sweep holds over a 30k corpus") {
  const auto rep = lemma_sweep(30000, 7);
  CHECK(rep.pass);
  CHECK(rep.samples == 30000);
  CHECK(rep.lemma1_samples == 30000);
  CHECK(rep.lemma2_samples == 30000);
  CHECK(rep.n1_samples > 0);
  CHECK(rep.lemma1_max_violation <= 1e-12);
  CHECK(rep.lemma2_max_violation <= 1e-12);
  CHECK(rep.n1_equality_max_err <= 1e-12);
  CHECK_THROWS_AS((void)lemma_sweep(0, 7), DomainError);
}

TEST_CASE("limit_sweep shrinks toward the pole-free bound") {
  const Polynomiald f = poly_from_roots(C(1, 0), cvec({C(-1.5, 0), C(-1.5, 0)}));
  const auto rep = limit_sweep(2, 0.5, 1.5, f, {10.0, 100.0, 1000.0, 1e6, 1e8}, 512);
  CHECK(rep.pass);
  CHECK(rep.monotone_decreasing);
  REQUIRE(rep.entries.size() == 5);
  CHECK(rep.final_diff == rep.entries.back().max_abs_diff);
  CHECK(rep.final_diff <= 1e-6);
  CHECK_THROWS_AS((void)limit_sweep(2, 0.5, 1.5, f, {10.0, 10.0}, 512), DomainError);
  CHECK_THROWS_AS((void)limit_sweep(2, 0.5, 1.5, f, {}, 512), DomainError);
}
