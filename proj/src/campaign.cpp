#include "ratgrow/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ratgrow {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Ordering comparisons on exactly-evaluated factors tolerate sign wobble at
// the last few bits; anything worse is a real ordering violation.
constexpr double kOrderSlop = 1e-14;

struct ChainSpec {
  const char* label;
  TheoremId ids[3];
};

constexpr ChainSpec kChains[] = {
    {"t1>=tI>=tG", {TheoremId::T1_NEW, TheoremId::I_RATHER, TheoremId::G_RATHER}},
    {"t2>=tJ>=tH", {TheoremId::T2_NEW, TheoremId::J_RATHER, TheoremId::H_RATHER}},
};

}  // namespace

CampaignReport fuzz_campaign(TheoremId id, const GeneratorConfig& cfg, long trials,
                             const std::vector<double>& etas, const CircleGrid& grid) {
  cfg.validate();
  grid.validate();
  if (trials < 1) throw DomainError("fuzz_campaign: trials must be >= 1");
  if (etas.empty()) throw DomainError("fuzz_campaign: eta set must be non-empty");

  CampaignReport rep;
  rep.theorem = id;
  rep.config = cfg;
  rep.trials = trials;
  rep.etas = etas;
  rep.grid = grid;
  rep.per_eta.resize(etas.size());
  std::vector<double> slack_sum(etas.size(), 0.0);
  std::vector<double> slack_min(etas.size(), kInf);
  for (std::size_t e = 0; e < etas.size(); ++e) rep.per_eta[e].eta = etas[e];

  double best = kInf;
  for (long t = 0; t < trials; ++t) {
    const Instance inst = generate_instance(cfg, static_cast<std::uint64_t>(t));
    for (std::size_t e = 0; e < etas.size(); ++e) {
      EtaSummary& es = rep.per_eta[e];
      BoundParamsd p;
      p.eta = etas[e];
      p.k = cfg.k;
      try {
        const VerificationReport vr = verify_theorem(id, inst, p, grid, cfg.pole_margin);
        if (vr.status == "checked") {
          ++rep.checks;
          ++es.checked;
          if (vr.pass) {
            ++rep.passes;
            ++es.passes;
          } else {
            ++rep.failures;
            ++es.failures;
          }
          slack_sum[e] += vr.slack;
          slack_min[e] = std::min(slack_min[e], vr.slack);
          if (vr.slack < best) {
            best = vr.slack;
            rep.min_slack_trial = t;
            rep.min_slack_eta_index = static_cast<int>(e);
            rep.witness = inst;
            rep.witness_report = vr;
          }
        } else if (vr.status == "hypothesis_unmet") {
          ++rep.hypothesis_unmet;
          ++es.hypothesis_unmet;
        } else {
          ++rep.all_skipped;
          ++es.all_skipped;
        }
      } catch (const Error&) {
        ++rep.errors;
        ++es.errors;
      }
    }
  }

  for (std::size_t e = 0; e < etas.size(); ++e) {
    EtaSummary& es = rep.per_eta[e];
    es.min_slack = es.checked > 0 ? slack_min[e] : kNaN;
    es.mean_slack = es.checked > 0 ? slack_sum[e] / static_cast<double>(es.checked) : kNaN;
  }
  rep.min_slack = rep.checks > 0 ? best : kNaN;
  return rep;
}

ComparisonTable compare_factors(const std::vector<TheoremId>& ids, const Instance& inst,
                                const std::vector<double>& etas, const BoundParamsd& base) {
  if (ids.empty()) throw DomainError("compare_factors: theorem list must be non-empty");
  if (etas.empty()) throw DomainError("compare_factors: eta set must be non-empty");
  if (inst.n < 1) throw DomainError("compare_factors: instance needs n >= 1");
  const unsigned n = static_cast<unsigned>(inst.n);

  ComparisonTable tab;
  tab.theorems = ids;
  tab.etas = etas;

  std::optional<CoeffModulid> cm;
  const bool any_coeffs = std::any_of(ids.begin(), ids.end(), [](TheoremId id) { return uses_coefficients(id); });
  if (any_coeffs) cm = poly_coeff_moduli(inst.numerator, inst.n);

  const auto factor_of = [&](TheoremId id, double eta) {
    BoundParamsd p = base;
    p.eta = eta;
    const std::optional<CoeffModulid> arg = uses_coefficients(id) ? cm : std::nullopt;
    if (is_rational_theorem(id)) return factor_rational(id, p, n, arg, inst.poles);
    if (inst.poles.size() != 0)
      throw DomainError("compare_factors: polynomial bound on an instance with poles");
    return factor_polynomial(id, p, n, arg);
  };

  for (double eta : etas) {
    for (TheoremId id : ids) {
      const BoundFactord bf = factor_of(id, eta);
      tab.entries.push_back({eta, id, bf.value, bf.correction_term});
    }
  }

  const auto lookup = [&](TheoremId id, std::size_t eta_idx) -> const ComparisonEntry* {
    const ComparisonEntry* row = tab.entries.data() + eta_idx * ids.size();
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (row[j].theorem == id) return row + j;
    return nullptr;
  };

  for (const ChainSpec& chain : kChains) {
    const bool present = std::all_of(std::begin(chain.ids), std::end(chain.ids), [&](TheoremId id) {
      return std::find(ids.begin(), ids.end(), id) != ids.end();
    });
    if (!present) continue;
    const bool chain_uses_k = uses_k(chain.ids[0]);
    const double kn = ipow(base.k, n);
    const bool gap = cm && (chain_uses_k ? cm->a0 > cm->an * kn : cm->a0 > cm->an);
    for (std::size_t e = 0; e < etas.size(); ++e) {
      OrderingCheck oc;
      oc.eta = etas[e];
      oc.chain = chain.label;
      const double f0 = lookup(chain.ids[0], e)->factor;
      const double f1 = lookup(chain.ids[1], e)->factor;
      const double f2 = lookup(chain.ids[2], e)->factor;
      oc.min_margin = std::min(f0 - f1, f1 - f2);
      oc.ok = oc.min_margin >= -kOrderSlop * f0;
      oc.strict_expected = gap && oc.eta > 0.0 && oc.eta < 1.0 && n > 1;
      oc.strict_ok = !oc.strict_expected || oc.min_margin > 0.0;
      tab.orderings.push_back(oc);
      tab.orderings_ok = tab.orderings_ok && oc.ok && oc.strict_ok;
    }
  }
  return tab;
}

LemmaSweepReport lemma_sweep(long samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("lemma_sweep: samples must be >= 1");
  LemmaSweepReport rep;
  rep.samples = samples;
  rep.seed = seed;

  constexpr std::uint64_t kStride = 16;  // n, eta, k, up to 8 moduli draws
  constexpr int kMaxN = 8;
  rep.lemma1_max_violation = -kInf;
  rep.lemma2_max_violation = -kInf;
  for (long s = 0; s < samples; ++s) {
    const std::uint64_t base = static_cast<std::uint64_t>(s) * kStride;
    const auto draw = [&](std::uint64_t idx) { return nth_draw01(seed, base + idx); };
    const int n = 1 + static_cast<int>(draw(0) * kMaxN);
    const double eta = draw(1);
    const double k = 1.0 + 2.0 * draw(2);
    std::vector<double> m1(n), m2(n);
    for (int j = 0; j < n; ++j) {
      const double u = draw(3 + static_cast<std::uint64_t>(j));
      m1[j] = 1.0 + 4.0 * u;
      m2[j] = k + 4.0 * u;
    }
    const double lhs1 = product_lhs<double>(eta, m1);
    const double rhs1 = lemma1_rhs<double>(eta, m1);
    const double lhs2 = product_lhs<double>(eta, m2);
    const double rhs2 = lemma2_rhs<double>(eta, k, m2);
    rep.lemma1_max_violation = std::max(rep.lemma1_max_violation, rhs1 - lhs1);
    rep.lemma2_max_violation = std::max(rep.lemma2_max_violation, rhs2 - lhs2);
    ++rep.lemma1_samples;
    ++rep.lemma2_samples;
    if (n == 1) {
      ++rep.n1_samples;
      rep.n1_equality_max_err =
          std::max({rep.n1_equality_max_err, std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)});
    }
  }
  rep.pass = rep.lemma1_max_violation <= 1e-12 && rep.lemma2_max_violation <= 1e-12 &&
             rep.n1_equality_max_err <= 1e-12;
  return rep;
}

LimitSweepReport limit_sweep(unsigned n, double eta, double k, const Polynomiald& numerator,
                             const std::vector<double>& beta_moduli, int grid_points) {
  if (beta_moduli.empty()) throw DomainError("limit_sweep: pole-modulus list must be non-empty");
  for (std::size_t i = 1; i < beta_moduli.size(); ++i)
    if (!(beta_moduli[i] > beta_moduli[i - 1]))
      throw DomainError("limit_sweep: pole moduli must be strictly increasing");

  LimitSweepReport rep;
  rep.n = n;
  rep.eta = eta;
  rep.k = k;
  for (double b : beta_moduli)
    rep.entries.push_back({b, limit_recovery_check(n, eta, k, numerator, b, grid_points)});

  rep.monotone_decreasing = true;
  for (std::size_t i = 1; i < rep.entries.size(); ++i)
    rep.monotone_decreasing =
        rep.monotone_decreasing && rep.entries[i].max_abs_diff < rep.entries[i - 1].max_abs_diff;
  rep.final_diff = rep.entries.back().max_abs_diff;
  rep.pass = rep.monotone_decreasing && rep.final_diff <= 1e-6;
  return rep;
}

}  // namespace ratgrow
