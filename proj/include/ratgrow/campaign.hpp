#ifndef RATGROW_CAMPAIGN_HPP
#define RATGROW_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratgrow/bounds.hpp"
#include "ratgrow/generate.hpp"
#include "ratgrow/verify.hpp"

namespace ratgrow {

struct EtaSummary {
  double eta = 0.0;
  long checked = 0;
  long passes = 0;
  long failures = 0;
  long hypothesis_unmet = 0;
  long all_skipped = 0;
  long errors = 0;
  double min_slack = 0.0;   // over checked trials; NaN when none
  double mean_slack = 0.0;  // ditto
};

struct CampaignReport {
  TheoremId theorem = TheoremId::T1_NEW;
  GeneratorConfig config;
  long trials = 0;
  std::vector<double> etas;
  CircleGrid grid;
  long checks = 0;
  long passes = 0;
  long failures = 0;
  long hypothesis_unmet = 0;
  long all_skipped = 0;
  long errors = 0;
  std::vector<EtaSummary> per_eta;
  // Global slack minimum; ties resolved by (slack, trial, eta index).
  double min_slack = 0.0;
  long min_slack_trial = -1;
  int min_slack_eta_index = -1;
  std::optional<Instance> witness;
  std::optional<VerificationReport> witness_report;
};

/// Randomized search for counterexamples / minimal slack: verify_theorem on
/// generated instances over every (trial, eta) pair. Individual trial errors
/// are tallied, not raised. Deterministic for a fixed config.
CampaignReport fuzz_campaign(TheoremId id, const GeneratorConfig& cfg, long trials,
                             const std::vector<double>& etas, const CircleGrid& grid);

struct ComparisonEntry {
  double eta = 0.0;
  TheoremId theorem = TheoremId::T1_NEW;
  double factor = 0.0;
  double correction = 0.0;
};

struct OrderingCheck {
  double eta = 0.0;
  std::string chain;
  bool ok = true;             // non-strict ordering held
  bool strict_expected = false;
  bool strict_ok = true;      // strict where expected
  double min_margin = 0.0;    // smallest adjacent difference in the chain
};

struct ComparisonTable {
  std::vector<TheoremId> theorems;
  std::vector<double> etas;
  std::vector<ComparisonEntry> entries;  // eta-major, theorem order as given
  std::vector<OrderingCheck> orderings;
  bool orderings_ok = true;
};

/// Factor values per (eta, theorem) on one instance, with the expected
/// sharpening chains t1 >= tI >= tG and t2 >= tJ >= tH flagged (checked for
/// whichever chain members appear in ids). Strictness is expected for
/// eta in (0,1), n > 1, and a coefficient gap.
ComparisonTable compare_factors(const std::vector<TheoremId>& ids, const Instance& inst,
                                const std::vector<double>& etas, const BoundParamsd& base);

struct LemmaSweepReport {
  long samples = 0;
  std::uint64_t seed = 0;
  long lemma1_samples = 0;
  long lemma2_samples = 0;
  long n1_samples = 0;
  double lemma1_max_violation = 0.0;  // max(rhs - lhs), <= 0 when the lemma holds exactly
  double lemma2_max_violation = 0.0;
  double n1_equality_max_err = 0.0;   // max |lhs - rhs| over n = 1 samples
  bool pass = false;
};

/// Property sweep for the two product lemmas over random (eta, k, eta_j)
/// tuples: lhs >= rhs - 1e-12 everywhere, exact equality at n = 1.
LemmaSweepReport lemma_sweep(long samples, std::uint64_t seed);

struct LimitEntry {
  double beta_modulus = 0.0;
  double max_abs_diff = 0.0;
};

struct LimitSweepReport {
  unsigned n = 1;
  double eta = 0.0;
  double k = 1.0;
  std::vector<LimitEntry> entries;
  double final_diff = 0.0;
  bool monotone_decreasing = false;
  bool pass = false;  // monotone and final difference <= 1e-6
};

/// limit_recovery_check over an increasing pole-modulus sequence; the
/// difference profile must shrink toward zero as the pole recedes.
LimitSweepReport limit_sweep(unsigned n, double eta, double k, const Polynomiald& numerator,
                             const std::vector<double>& beta_moduli, int grid_points = 1024);

}  // namespace ratgrow

#endif  // RATGROW_CAMPAIGN_HPP
