#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ratgrow/generate.hpp"
#include "ratgrow/report.hpp"

#ifndef RATGROW_VERSION
#define RATGROW_VERSION "0.0.0"
#endif

namespace {

using namespace ratgrow;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnmet = 3;

struct OutputOpts {
  std::string format = "json";
  std::string out_path;
  bool no_timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", out.out_path, "Write the report to this path instead of stdout");
  cmd->add_flag("--no-timestamp", out.no_timestamp, "Omit the timestamp for byte-reproducible output");
}

int emit(Json config, Json payload, const std::string& kind, const OutputOpts& out) {
  ReportEnvelope env;
  env.version = RATGROW_VERSION;
  if (!out.no_timestamp) env.timestamp = iso8601_utc_now();
  env.config = std::move(config);
  env.payload = std::move(payload);
  env.payload_kind = kind;
  const std::string text = render(env, *format_from_name(out.format));
  if (out.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "ratgrow: cannot write --out path " << out.out_path << "\n";
      return kExitUsage;
    }
    f << text;
  }
  return kExitPass;
}

TheoremId require_tag(const std::string& tag) {
  const auto id = theorem_from_tag(tag);
  if (!id) throw ParseError("unknown theorem tag '" + tag + "' for --theorem");
  return *id;
}

std::vector<double> parse_eta_sweep(const std::string& spec) {
  double a = 0, b = 0, step = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &tail) != 3)
    throw ParseError("--eta-sweep expects start:stop:step, got '" + spec + "'");
  if (!(step > 0)) throw ParseError("--eta-sweep step must be positive");
  if (b < a) throw ParseError("--eta-sweep needs stop >= start");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double v = a + step * i;
    if (v > b + 1e-12) break;
    out.push_back(std::min(v, b));
  }
  return out;
}

std::vector<double> tenths() {
  std::vector<double> v;
  for (int i = 0; i <= 10; ++i) v.push_back(i / 10.0);
  return v;
}

void check_etas(const std::vector<double>& etas) {
  for (double e : etas)
    if (!(e >= 0.0 && e <= 1.0)) throw ParseError("eta values must lie in [0,1]");
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
  if (seed_opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("RATGROW_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (env[0] == '\0' || end == nullptr || *end != '\0')
      throw ParseError("RATGROW_SEED must be an unsigned integer");
    return v;
  }
  return flag_value;
}

Json etas_json(const std::vector<double>& etas) {
  Json a = Json::array();
  for (double e : etas) a.push_back(e);
  return a;
}

ExtremalFamily::Kind family_from_name(const std::string& name) {
  if (name == "zeta_power") return ExtremalFamily::Kind::ZetaPower;
  if (name == "k_power") return ExtremalFamily::Kind::KPower;
  if (name == "ab_power") return ExtremalFamily::Kind::AbPower;
  if (name == "linear_gamma") return ExtremalFamily::Kind::LinearGamma;
  throw ParseError("unknown family '" + name + "' for --family");
}

TheoremId default_theorem_for(ExtremalFamily::Kind kind) {
  switch (kind) {
    case ExtremalFamily::Kind::ZetaPower: return TheoremId::A_RIVLIN;
    case ExtremalFamily::Kind::KPower: return TheoremId::F_DK;
    case ExtremalFamily::Kind::AbPower: return TheoremId::E_DK;
    case ExtremalFamily::Kind::LinearGamma: return TheoremId::D_KM;
  }
  return TheoremId::A_RIVLIN;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth-bound factors for polynomials and rational functions, with numerical verification"};
  app.set_version_flag("--version", RATGROW_VERSION);
  app.require_subcommand(1);

  // verify ------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "Check one bound on one instance over an eta set");
  std::string v_tag;
  std::string v_instance;
  std::vector<double> v_etas;
  std::string v_sweep;
  double v_k = 1.0, v_nu = 1.0, v_margin = kDefaultPoleMargin;
  CircleGrid v_grid;
  OutputOpts v_out;
  cmd_verify->add_option("--theorem", v_tag, "Bound tag (e2max, e1varga, tA..tJ, t1, t2)")->required();
  cmd_verify->add_option("--instance", v_instance, "Instance JSON path")->required();
  auto* v_eta_opt = cmd_verify->add_option("--eta", v_etas, "Shrink radius (repeatable)");
  cmd_verify->add_option("--eta-sweep", v_sweep, "Eta sweep start:stop:step")->excludes(v_eta_opt);
  auto* v_k_opt = cmd_verify->add_option("--k", v_k, "Zero-exclusion radius (default: instance k)");
  cmd_verify->add_option("--nu", v_nu, "Growth radius for e2max")->check(CLI::Range(1.0, 1e9));
  cmd_verify->add_option("--grid", v_grid.points, "Circle grid points");
  cmd_verify->add_option("--refine-iters", v_grid.refine_iters, "Golden-section refinement iterations");
  cmd_verify->add_option("--pole-margin", v_margin, "Required pole modulus margin above 1");
  add_output_flags(cmd_verify, v_out);

  // fuzz --------------------------------------------------------------
  auto* cmd_fuzz = app.add_subcommand("fuzz", "Randomized soundness campaign for a rational bound");
  std::string f_tag = "t1";
  int f_n = 3;
  long f_trials = 1000;
  std::uint64_t f_seed = 0;
  double f_k = 1.0, f_margin = kDefaultPoleMargin;
  std::vector<double> f_etas;
  std::string f_sweep;
  CircleGrid f_grid;
  OutputOpts f_out;
  cmd_fuzz->add_option("--theorem", f_tag, "Rational bound tag (default t1)");
  cmd_fuzz->add_option("--n", f_n, "Degree / pole count")->check(CLI::Range(1, 64));
  cmd_fuzz->add_option("--trials", f_trials, "Number of random instances")->check(CLI::PositiveNumber);
  auto* f_seed_opt = cmd_fuzz->add_option("--seed", f_seed, "Random stream seed (or RATGROW_SEED)");
  cmd_fuzz->add_option("--k", f_k, "Zero-exclusion radius of generated roots");
  auto* f_eta_opt = cmd_fuzz->add_option("--eta", f_etas, "Shrink radius (repeatable)");
  cmd_fuzz->add_option("--eta-sweep", f_sweep, "Eta sweep start:stop:step")->excludes(f_eta_opt);
  cmd_fuzz->add_option("--grid", f_grid.points, "Circle grid points");
  cmd_fuzz->add_option("--refine-iters", f_grid.refine_iters, "Golden-section refinement iterations");
  cmd_fuzz->add_option("--pole-margin", f_margin, "Pole modulus margin for generated poles");
  add_output_flags(cmd_fuzz, f_out);

  // compare -----------------------------------------------------------
  auto* cmd_compare = app.add_subcommand("compare", "Tabulate factors and sharpening chains on one instance");
  std::vector<std::string> c_tags;
  std::string c_instance;
  std::vector<double> c_etas;
  std::string c_sweep;
  double c_k = 1.0;
  OutputOpts c_out;
  cmd_compare->add_option("--theorem", c_tags, "Bound tags (repeatable; default both chains)");
  cmd_compare->add_option("--instance", c_instance, "Instance JSON path")->required();
  auto* c_eta_opt = cmd_compare->add_option("--eta", c_etas, "Shrink radius (repeatable)");
  cmd_compare->add_option("--eta-sweep", c_sweep, "Eta sweep start:stop:step")->excludes(c_eta_opt);
  auto* c_k_opt = cmd_compare->add_option("--k", c_k, "Zero-exclusion radius (default: instance k)");
  add_output_flags(cmd_compare, c_out);

  // sharpness ---------------------------------------------------------
  auto* cmd_sharp = app.add_subcommand("sharpness", "Check that an extremal family attains a bound");
  std::string s_family = "k_power";
  std::string s_tag;
  int s_n = 3;
  double s_k = 1.0;
  std::vector<double> s_etas;
  std::string s_sweep;
  CircleGrid s_grid;
  OutputOpts s_out;
  cmd_sharp->add_option("--family", s_family, "zeta_power | k_power | ab_power | linear_gamma");
  cmd_sharp->add_option("--theorem", s_tag, "Bound tag (default: the family's theorem)");
  cmd_sharp->add_option("--n", s_n, "Family degree")->check(CLI::Range(1, 64));
  cmd_sharp->add_option("--k", s_k, "Zero-exclusion radius");
  auto* s_eta_opt = cmd_sharp->add_option("--eta", s_etas, "Shrink radius (repeatable)");
  cmd_sharp->add_option("--eta-sweep", s_sweep, "Eta sweep start:stop:step")->excludes(s_eta_opt);
  cmd_sharp->add_option("--grid", s_grid.points, "Circle grid points");
  cmd_sharp->add_option("--refine-iters", s_grid.refine_iters, "Golden-section refinement iterations");
  add_output_flags(cmd_sharp, s_out);

  // limit -------------------------------------------------------------
  auto* cmd_limit = app.add_subcommand("limit", "Pole-to-infinity recovery of the polynomial bounds");
  int l_n = 3;
  double l_eta = 0.5, l_k = 1.0;
  std::vector<double> l_betas;
  int l_grid = 1024;
  OutputOpts l_out;
  cmd_limit->add_option("--n", l_n, "Degree / pole multiplicity")->check(CLI::Range(1, 64));
  cmd_limit->add_option("--eta", l_eta, "Shrink radius")->check(CLI::Range(0.0, 1.0));
  cmd_limit->add_option("--k", l_k, "Zero-exclusion radius");
  cmd_limit->add_option("--beta-modulus", l_betas, "Pole moduli sweep (repeatable, increasing)");
  cmd_limit->add_option("--grid", l_grid, "Theta grid points");
  add_output_flags(cmd_limit, l_out);

  // lemmas ------------------------------------------------------------
  auto* cmd_lemmas = app.add_subcommand("lemmas", "Property sweep of the two product lemmas");
  long m_trials = 100000;
  std::uint64_t m_seed = 0;
  OutputOpts m_out;
  cmd_lemmas->add_option("--trials", m_trials, "Number of random tuples")->check(CLI::PositiveNumber);
  auto* m_seed_opt = cmd_lemmas->add_option("--seed", m_seed, "Random stream seed (or RATGROW_SEED)");
  add_output_flags(cmd_lemmas, m_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*cmd_verify) {
      const TheoremId id = require_tag(v_tag);
      const Instance inst = load_instance(v_instance);
      if (v_k_opt->count() == 0 && inst.k) v_k = *inst.k;
      std::vector<double> etas = !v_sweep.empty() ? parse_eta_sweep(v_sweep)
                                 : !v_etas.empty() ? v_etas
                                                   : tenths();
      check_etas(etas);
      Json reports = Json::array();
      bool any_fail = false, any_unmet = false;
      for (double eta : etas) {
        BoundParamsd p;
        p.eta = eta;
        p.k = v_k;
        p.nu = v_nu;
        const VerificationReport rep = verify_theorem(id, inst, p, v_grid, v_margin);
        any_fail = any_fail || (rep.status == "checked" && !rep.pass);
        any_unmet = any_unmet || rep.status == "hypothesis_unmet";
        reports.push_back(to_json(rep));
      }
      Json config{{"subcommand", "verify"},       {"theorem", v_tag},
                  {"instance", v_instance},       {"etas", etas_json(etas)},
                  {"k", v_k},                     {"nu", v_nu},
                  {"grid", Json{{"points", v_grid.points}, {"refine_iters", v_grid.refine_iters}}},
                  {"pole_margin", v_margin}};
      const int rc = emit(std::move(config), Json{{"reports", reports}}, "verify", v_out);
      if (rc != kExitPass) return rc;
      return any_fail ? kExitFail : any_unmet ? kExitUnmet : kExitPass;
    }

    if (*cmd_fuzz) {
      const TheoremId id = require_tag(f_tag);
      if (!is_rational_theorem(id))
        throw ParseError("fuzz needs a rational-function bound (tG..tJ, t1, t2)");
      GeneratorConfig cfg;
      cfg.n = f_n;
      cfg.k = f_k;
      cfg.pole_margin = f_margin;
      cfg.seed = resolve_seed(f_seed_opt, f_seed);
      std::vector<double> etas = !f_sweep.empty() ? parse_eta_sweep(f_sweep)
                                 : !f_etas.empty() ? f_etas
                                                   : tenths();
      check_etas(etas);
      const CampaignReport rep = fuzz_campaign(id, cfg, f_trials, etas, f_grid);
      Json config{{"subcommand", "fuzz"},
                  {"theorem", f_tag},
                  {"trials", f_trials},
                  {"seed", cfg.seed},
                  {"etas", etas_json(etas)},
                  {"grid", Json{{"points", f_grid.points}, {"refine_iters", f_grid.refine_iters}}}};
      const int rc = emit(std::move(config), to_json(rep), "fuzz", f_out);
      if (rc != kExitPass) return rc;
      return rep.failures > 0 || rep.errors > 0 ? kExitFail : kExitPass;
    }

    if (*cmd_compare) {
      std::vector<TheoremId> ids;
      if (c_tags.empty()) {
        ids = {TheoremId::T1_NEW, TheoremId::I_RATHER, TheoremId::G_RATHER,
               TheoremId::T2_NEW, TheoremId::J_RATHER, TheoremId::H_RATHER};
      } else {
        for (const std::string& t : c_tags) ids.push_back(require_tag(t));
      }
      const Instance inst = load_instance(c_instance);
      if (c_k_opt->count() == 0 && inst.k) c_k = *inst.k;
      std::vector<double> etas = !c_sweep.empty() ? parse_eta_sweep(c_sweep)
                                 : !c_etas.empty() ? c_etas
                                                   : tenths();
      check_etas(etas);
      BoundParamsd base;
      base.k = c_k;
      const ComparisonTable tab = compare_factors(ids, inst, etas, base);
      Json tags = Json::array();
      for (TheoremId id : ids) tags.push_back(std::string(theorem_tag(id)));
      Json config{{"subcommand", "compare"},
                  {"theorems", tags},
                  {"instance", c_instance},
                  {"etas", etas_json(etas)},
                  {"k", c_k}};
      const int rc = emit(std::move(config), to_json(tab), "compare", c_out);
      if (rc != kExitPass) return rc;
      return tab.orderings_ok ? kExitPass : kExitFail;
    }

    if (*cmd_sharp) {
      ExtremalFamily fam;
      fam.kind = family_from_name(s_family);
      fam.gamma = Complexd(s_k, 0.0);  // canonical |gamma| = k witness
      const TheoremId id = s_tag.empty() ? default_theorem_for(fam.kind) : require_tag(s_tag);
      std::vector<double> etas = !s_sweep.empty() ? parse_eta_sweep(s_sweep)
                                 : !s_etas.empty() ? s_etas
                                                   : std::vector<double>{0.0, 0.25, 0.5, 0.75};
      check_etas(etas);
      Json reports = Json::array();
      bool all_pass = true;
      for (double eta : etas) {
        BoundParamsd p;
        p.eta = eta;
        p.k = s_k;
        const SharpnessReport rep = sharpness_check(fam, id, p, static_cast<unsigned>(s_n), s_grid);
        all_pass = all_pass && rep.pass;
        reports.push_back(to_json(rep));
      }
      Json config{{"subcommand", "sharpness"}, {"family", s_family},
                  {"theorem", std::string(theorem_tag(id))},
                  {"n", s_n},                  {"k", s_k},
                  {"etas", etas_json(etas)},
                  {"grid", Json{{"points", s_grid.points}, {"refine_iters", s_grid.refine_iters}}}};
      const int rc = emit(std::move(config), Json{{"reports", reports}}, "sharpness", s_out);
      if (rc != kExitPass) return rc;
      return all_pass ? kExitPass : kExitFail;
    }

    if (*cmd_limit) {
      if (l_betas.empty())
        for (int e = 1; e <= 8; ++e) l_betas.push_back(std::pow(10.0, e));
      ExtremalFamily fam;
      fam.kind = ExtremalFamily::Kind::KPower;
      const Polynomiald poly = build_family(fam, static_cast<unsigned>(l_n), l_k);
      const LimitSweepReport rep =
          limit_sweep(static_cast<unsigned>(l_n), l_eta, l_k, poly, l_betas, l_grid);
      Json betas = Json::array();
      for (double b : l_betas) betas.push_back(b);
      Json config{{"subcommand", "limit"}, {"n", l_n},       {"eta", l_eta},
                  {"k", l_k},              {"betas", betas}, {"grid", l_grid}};
      const int rc = emit(std::move(config), to_json(rep), "limit", l_out);
      if (rc != kExitPass) return rc;
      return rep.pass ? kExitPass : kExitFail;
    }

    if (*cmd_lemmas) {
      const std::uint64_t seed = resolve_seed(m_seed_opt, m_seed);
      const LemmaSweepReport rep = lemma_sweep(m_trials, seed);
      Json config{{"subcommand", "lemmas"}, {"trials", m_trials}, {"seed", seed}};
      const int rc = emit(std::move(config), to_json(rep), "lemmas", m_out);
      if (rc != kExitPass) return rc;
      return rep.pass ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    std::cerr << "ratgrow: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ratgrow: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
