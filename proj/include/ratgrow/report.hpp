#ifndef RATGROW_REPORT_HPP
#define RATGROW_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "ratgrow/campaign.hpp"
#include "ratgrow/instance_io.hpp"
#include "ratgrow/jsonio.hpp"
#include "ratgrow/verify.hpp"

namespace ratgrow {

enum class ReportFormat { Json, Csv, Text };

std::optional<ReportFormat> format_from_name(std::string_view name);

/// Common wrapper around every CLI payload. The payload is already in object
/// form; payload_kind names the subcommand shape ("verify", "fuzz", "compare",
/// "sharpness", "limit", "lemmas") and selects the CSV/text flattening.
struct ReportEnvelope {
  std::string version;
  std::optional<std::string> timestamp;  // absent under --no-timestamp
  Json config;
  Json payload;
  std::string payload_kind;
};

Json to_json(const VerificationReport& rep);
Json to_json(const CampaignReport& rep);
Json to_json(const ComparisonTable& tab);
Json to_json(const SharpnessReport& rep);
Json to_json(const LemmaSweepReport& rep);
Json to_json(const LimitSweepReport& rep);

/// Serializes the envelope. JSON: canonical single object, alphabetical keys,
/// 17-significant-digit numbers. CSV: header plus one row per table entry,
/// locale-independent. Text: aligned human-readable summary. Identical input
/// gives identical bytes; the timestamp is the only varying field.
std::string render(const ReportEnvelope& env, ReportFormat format);

std::string iso8601_utc_now();

}  // namespace ratgrow

#endif  // RATGROW_REPORT_HPP
