#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <string>

#include "ratgrow/generate.hpp"
#include "ratgrow/instance_io.hpp"
#include "ratgrow/report.hpp"

using namespace ratgrow;
using C = std::complex<double>;

TEST_CASE("fmt_double17") {
  CHECK(fmt_double17(1.0 / 3.0) == "0.33333333333333331");
  CHECK(fmt_double17(0.5) == "0.5");
  CHECK(fmt_double17(-0.0) == "0");
  CHECK(fmt_double17(0.0) == "0");
  CHECK(fmt_double17(1.0) == "1");
  CHECK(fmt_double17(std::numeric_limits<double>::quiet_NaN()) == "null");
  CHECK(fmt_double17(std::numeric_limits<double>::infinity()) == "null");
}

TEST_CASE("fmt_double17 round-trips doubles exactly") {
  SplitMix64 g(123);
  for (int i = 0; i < 2000; ++i) {
    const int ex = static_cast<int>(g.next01() * 20) - 10;
    const double x = (g.next01() - 0.5) * std::pow(10.0, ex);
    const std::string s = fmt_double17(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("dump_canonical sorts keys and stays compact") {
  Json j;
  j["b"] = 1;
  j["a"] = Json::array({1.5, true, nullptr});
  j["c"] = "x\"y\n";
  CHECK(dump_canonical(j) == "{\"a\":[1.5,true,null],\"b\":1,\"c\":\"x\\\"y\\n\"}");
}

TEST_CASE("instance parsing, coefficient form") {
  const auto inst = instance_from_text(
      R"({"n":1,"numerator":{"coeffs":[[2,0],[1,0]]},"poles":[[2,0]]})");
  CHECK(inst.n == 1);
  CHECK_FALSE(inst.roots.has_value());
  CHECK_FALSE(inst.k.has_value());
  CHECK(inst.numerator.coeffs()[0] == C(2, 0));
  CHECK(inst.numerator.coeffs()[1] == C(1, 0));
  CHECK(inst.poles.size() == 1);
  CHECK(inst.poles[0] == C(2, 0));
}

TEST_CASE("instance parsing, root form") {
  const auto inst = instance_from_text(
      R"({"k":2,"n":1,"numerator":{"roots":{"leading":[1,0],"roots":[[-2,0]]}},"poles":[[3,0]]})");
  REQUIRE(inst.roots.has_value());
  CHECK(inst.roots->leading == C(1, 0));
  CHECK(inst.roots->roots[0] == C(-2, 0));
  CHECK(inst.numerator.coeffs()[0] == C(2, 0));
  CHECK(inst.numerator.coeffs()[1] == C(1, 0));
  REQUIRE(inst.k.has_value());
  CHECK(*inst.k == 2.0);
}

TEST_CASE("instance parsing, polynomial instance with empty poles") {
  const auto inst = instance_from_text(R"({"n":2,"numerator":{"coeffs":[[1,0],[0,0],[1,0]]},"poles":[]})");
  CHECK(inst.poles.size() == 0);
  CHECK(inst.n == 2);
}

TEST_CASE("instance parsing rejects malformed input") {
  // malformed JSON
  CHECK_THROWS_AS((void)instance_from_text("{"), ParseError);
  // not an object
  CHECK_THROWS_AS((void)instance_from_text("[1,2]"), ParseError);
  // missing n
  CHECK_THROWS_AS((void)instance_from_text(R"({"numerator":{"coeffs":[[1,0]]},"poles":[]})"), ParseError);
  // n not a positive integer
  CHECK_THROWS_AS(
      (void)instance_from_text(R"({"n":0,"numerator":{"coeffs":[[1,0]]},"poles":[]})"), ParseError);
  // both numerator forms at once
  CHECK_THROWS_AS((void)instance_from_text(
                      R"({"n":1,"numerator":{"coeffs":[[1,0],[1,0]],"roots":{"leading":[1,0],"roots":[[-1,0]]}},"poles":[[2,0]]})"),
                  ParseError);
  // neither form
  CHECK_THROWS_AS((void)instance_from_text(R"({"n":1,"numerator":{},"poles":[[2,0]]})"), ParseError);
  // degree exceeding n
  CHECK_THROWS_AS(
      (void)instance_from_text(R"({"n":1,"numerator":{"coeffs":[[1,0],[1,0],[1,0]]},"poles":[[2,0]]})"),
      ParseError);
  // pole count neither 0 nor n
  CHECK_THROWS_AS(
      (void)instance_from_text(R"({"n":2,"numerator":{"coeffs":[[1,0],[0,0],[1,0]]},"poles":[[2,0]]})"),
      ParseError);
  // k below 1
  CHECK_THROWS_AS(
      (void)instance_from_text(R"({"k":0.5,"n":1,"numerator":{"coeffs":[[1,0],[1,0]]},"poles":[[2,0]]})"),
      ParseError);
  // missing poles
  CHECK_THROWS_AS((void)instance_from_text(R"({"n":1,"numerator":{"coeffs":[[1,0],[1,0]]}})"), ParseError);
  // complex entries must be [re, im] pairs
  CHECK_THROWS_AS((void)instance_from_text(R"({"n":1,"numerator":{"coeffs":[[1,0],[1]]},"poles":[[2,0]]})"),
                  ParseError);
}

TEST_CASE("instance serialization round-trips bytes and digest") {
  GeneratorConfig cfg;
  cfg.n = 4;
  cfg.k = 1.5;
  cfg.seed = 91;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto inst = generate_instance(cfg, t);
    const std::string text = dump_canonical(instance_to_json(inst));
    const auto back = instance_from_text(text);
    CHECK(dump_canonical(instance_to_json(back)) == text);
    CHECK(instance_digest(back) == instance_digest(inst));
    REQUIRE(back.roots.has_value());
    for (Eigen::Index j = 0; j < 4; ++j) {
      CHECK(back.roots->roots[j] == inst.roots->roots[j]);
      CHECK(back.poles[j] == inst.poles[j]);
      CHECK(back.numerator.coeffs()[j] == inst.numerator.coeffs()[j]);
    }
  }
}

TEST_CASE("instance digest is 16 hex characters and input-sensitive") {
  GeneratorConfig cfg;
  cfg.n = 2;
  cfg.seed = 5;
  const auto a = generate_instance(cfg, 0);
  const auto d = instance_digest(a);
  CHECK(d.size() == 16);
  CHECK(d.find_first_not_of("0123456789abcdef") == std::string::npos);
}

TEST_CASE("envelope rendering") {
  ReportEnvelope env;
  env.version = "0.1.0";
  env.config = Json{{"subcommand", "lemmas"}};
  env.payload_kind = "lemmas";
  const auto rep = lemma_sweep(100, 3);
  env.payload = to_json(rep);

  SUBCASE("json omits the timestamp under --no-timestamp and is deterministic") {
    const std::string a = render(env, ReportFormat::Json);
    const std::string b = render(env, ReportFormat::Json);
    CHECK(a == b);
    CHECK(a.find("timestamp") == std::string::npos);
    CHECK(a.front() == '{');
    CHECK(a.back() == '\n');
    env.timestamp = "2026-01-01T00:00:00Z";
    const std::string c = render(env, ReportFormat::Json);
    CHECK(c.find("\"timestamp\":\"2026-01-01T00:00:00Z\"") != std::string::npos);
  }
  SUBCASE("lemmas csv has a header and three data rows") {
    const std::string csv = render(env, ReportFormat::Csv);
    CHECK(csv.substr(0, 18) == "check,samples,valu");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  }
  SUBCASE("text output mentions the payload kind") {
    const std::string text = render(env, ReportFormat::Text);
    CHECK(text.find("lemmas") != std::string::npos);
  }
}

TEST_CASE("compare table renders eta-major csv") {
  ComplexVectord coeffs(3);
  coeffs << C(4, 0), C(0, 0), C(1, 0);
  ComplexVectord poles(2);
  poles << C(2, 0), C(2, 0);
  Instance inst{2, Polynomiald(coeffs), std::nullopt, PoleSetd(poles), std::nullopt};
  BoundParamsd base;
  const auto tab = compare_factors({TheoremId::T1_NEW, TheoremId::I_RATHER}, inst, {0.0, 0.3, 0.6}, base);

  ReportEnvelope env;
  env.version = "0.1.0";
  env.config = Json::object();
  env.payload_kind = "compare";
  env.payload = to_json(tab);
  const std::string csv = render(env, ReportFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 2 theorems x 3 etas
  CHECK(csv.rfind("eta,theorem,factor,correction\n", 0) == 0);
  CHECK(csv.find("0,t1,") != std::string::npos);
  CHECK(csv.find("0.29999999999999999,t1,") != std::string::npos);
}

TEST_CASE("verification report json carries every contract field") {
  ComplexVectord coeffs(2);
  coeffs << C(2, 0), C(1, 0);
  ComplexVectord poles(1);
  poles << C(2, 0);
  Instance inst{1, Polynomiald(coeffs), std::nullopt, PoleSetd(poles), std::nullopt};
  BoundParamsd p;
  const auto rep = verify_theorem(TheoremId::T1_NEW, inst, p, CircleGrid{256, 40});
  const Json j = to_json(rep);
  for (const char* key : {"theorem", "eta", "k", "nu", "factor", "min_observed", "argmin_theta",
                          "slack", "pass", "violations", "skipped_points", "hypothesis_validated",
                          "mode", "status", "instance_digest"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.at("theorem") == "t1");
  // coefficient-form instance: hypotheses cannot be confirmed, factor still evaluated
  CHECK(j.at("hypothesis_validated") == false);
  CHECK(j.at("status") == "checked");
}
