#include "ratgrow/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace ratgrow {

std::optional<ReportFormat> format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  return std::nullopt;
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["theorem"] = std::string(theorem_tag(rep.theorem));
  j["eta"] = rep.params.eta;
  j["k"] = rep.params.k;
  j["nu"] = rep.params.nu;
  j["factor"] = rep.factor;
  j["min_observed"] = rep.min_observed;
  j["argmin_theta"] = rep.argmin_theta;
  j["slack"] = rep.slack;
  j["pass"] = rep.pass;
  j["violations"] = rep.violations;
  j["skipped_points"] = rep.skipped_points;
  j["hypothesis_validated"] = rep.hypothesis_validated;
  j["mode"] = rep.mode;
  j["status"] = rep.status;
  j["instance_digest"] = rep.instance_digest;
  return j;
}

Json to_json(const CampaignReport& rep) {
  Json j;
  j["theorem"] = std::string(theorem_tag(rep.theorem));
  j["trials"] = rep.trials;
  j["etas"] = rep.etas;
  j["grid"] = Json{{"points", rep.grid.points}, {"refine_iters", rep.grid.refine_iters}};
  j["config"] = Json{{"n", rep.config.n},
                     {"k", rep.config.k},
                     {"root_modulus_max", rep.config.root_modulus_max},
                     {"pole_margin", rep.config.pole_margin},
                     {"pole_modulus_max", rep.config.pole_modulus_max},
                     {"seed", rep.config.seed}};
  j["counts"] = Json{{"checks", rep.checks},
                     {"passes", rep.passes},
                     {"failures", rep.failures},
                     {"hypothesis_unmet", rep.hypothesis_unmet},
                     {"all_skipped", rep.all_skipped},
                     {"errors", rep.errors}};
  Json per = Json::array();
  for (const EtaSummary& es : rep.per_eta) {
    per.push_back(Json{{"eta", es.eta},
                       {"checked", es.checked},
                       {"passes", es.passes},
                       {"failures", es.failures},
                       {"hypothesis_unmet", es.hypothesis_unmet},
                       {"all_skipped", es.all_skipped},
                       {"errors", es.errors},
                       {"min_slack", es.min_slack},
                       {"mean_slack", es.mean_slack}});
  }
  j["per_eta"] = per;
  j["min_slack"] = rep.min_slack;
  j["min_slack_trial"] = rep.min_slack_trial;
  j["min_slack_eta_index"] = rep.min_slack_eta_index;
  if (rep.witness && rep.witness_report) {
    j["witness"] = Json{{"instance", instance_to_json(*rep.witness)},
                        {"report", to_json(*rep.witness_report)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const ComparisonTable& tab) {
  Json j;
  Json ths = Json::array();
  for (TheoremId id : tab.theorems) ths.push_back(std::string(theorem_tag(id)));
  j["theorems"] = ths;
  j["etas"] = tab.etas;
  Json entries = Json::array();
  for (const ComparisonEntry& e : tab.entries) {
    entries.push_back(Json{{"eta", e.eta},
                           {"theorem", std::string(theorem_tag(e.theorem))},
                           {"factor", e.factor},
                           {"correction", e.correction}});
  }
  j["entries"] = entries;
  Json ords = Json::array();
  for (const OrderingCheck& oc : tab.orderings) {
    ords.push_back(Json{{"eta", oc.eta},
                        {"chain", oc.chain},
                        {"ok", oc.ok},
                        {"strict_expected", oc.strict_expected},
                        {"strict_ok", oc.strict_ok},
                        {"min_margin", oc.min_margin}});
  }
  j["orderings"] = ords;
  j["orderings_ok"] = tab.orderings_ok;
  return j;
}

Json to_json(const SharpnessReport& rep) {
  Json j;
  j["family"] = family_tag(rep.family.kind);
  j["theorem"] = std::string(theorem_tag(rep.theorem));
  j["n"] = rep.n;
  j["eta"] = rep.params.eta;
  j["k"] = rep.params.k;
  j["factor"] = rep.factor;
  j["min_ratio"] = rep.min_ratio;
  j["argmin_theta"] = rep.argmin_theta;
  j["abs_diff"] = rep.abs_diff;
  j["pass"] = rep.pass;
  return j;
}

Json to_json(const LemmaSweepReport& rep) {
  Json j;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["lemma1_samples"] = rep.lemma1_samples;
  j["lemma2_samples"] = rep.lemma2_samples;
  j["n1_samples"] = rep.n1_samples;
  j["lemma1_max_violation"] = rep.lemma1_max_violation;
  j["lemma2_max_violation"] = rep.lemma2_max_violation;
  j["n1_equality_max_err"] = rep.n1_equality_max_err;
  j["pass"] = rep.pass;
  return j;
}

Json to_json(const LimitSweepReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["eta"] = rep.eta;
  j["k"] = rep.k;
  Json entries = Json::array();
  for (const LimitEntry& e : rep.entries)
    entries.push_back(Json{{"beta_modulus", e.beta_modulus}, {"max_abs_diff", e.max_abs_diff}});
  j["entries"] = entries;
  j["final_diff"] = rep.final_diff;
  j["monotone_decreasing"] = rep.monotone_decreasing;
  j["pass"] = rep.pass;
  return j;
}

namespace {

std::string csv_number(const Json& j) {
  if (j.is_null()) return "nan";
  if (j.is_number_float()) {
    const double x = j.get<double>();
    return std::isfinite(x) ? fmt_double17(x) : "nan";
  }
  return j.dump();
}

std::string csv_field(const Json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return csv_number(j);
}

void csv_row(std::string& out, std::initializer_list<Json> fields) {
  bool first = true;
  for (const Json& f : fields) {
    if (!first) out += ',';
    first = false;
    out += csv_field(f);
  }
  out += '\n';
}

std::string render_csv(const ReportEnvelope& env) {
  const Json& p = env.payload;
  std::string out;
  if (env.payload_kind == "verify") {
    out += "theorem,eta,k,nu,factor,min_observed,argmin_theta,slack,pass,violations,skipped_points,"
           "status,mode,hypothesis_validated,instance_digest\n";
    for (const Json& r : p.at("reports"))
      csv_row(out, {r.at("theorem"), r.at("eta"), r.at("k"), r.at("nu"), r.at("factor"),
                    r.at("min_observed"), r.at("argmin_theta"), r.at("slack"), r.at("pass"),
                    r.at("violations"), r.at("skipped_points"), r.at("status"), r.at("mode"),
                    r.at("hypothesis_validated"), r.at("instance_digest")});
  } else if (env.payload_kind == "fuzz") {
    out += "theorem,eta,checked,passes,failures,hypothesis_unmet,all_skipped,errors,min_slack,mean_slack\n";
    for (const Json& r : p.at("per_eta"))
      csv_row(out, {p.at("theorem"), r.at("eta"), r.at("checked"), r.at("passes"), r.at("failures"),
                    r.at("hypothesis_unmet"), r.at("all_skipped"), r.at("errors"), r.at("min_slack"),
                    r.at("mean_slack")});
  } else if (env.payload_kind == "compare") {
    out += "eta,theorem,factor,correction\n";
    for (const Json& r : p.at("entries"))
      csv_row(out, {r.at("eta"), r.at("theorem"), r.at("factor"), r.at("correction")});
  } else if (env.payload_kind == "sharpness") {
    out += "family,theorem,n,eta,k,factor,min_ratio,argmin_theta,abs_diff,pass\n";
    for (const Json& r : p.at("reports"))
      csv_row(out, {r.at("family"), r.at("theorem"), r.at("n"), r.at("eta"), r.at("k"), r.at("factor"),
                    r.at("min_ratio"), r.at("argmin_theta"), r.at("abs_diff"), r.at("pass")});
  } else if (env.payload_kind == "limit") {
    out += "beta_modulus,max_abs_diff\n";
    for (const Json& r : p.at("entries"))
      csv_row(out, {r.at("beta_modulus"), r.at("max_abs_diff")});
  } else if (env.payload_kind == "lemmas") {
    out += "check,samples,value\n";
    csv_row(out, {"lemma1_max_violation", p.at("lemma1_samples"), p.at("lemma1_max_violation")});
    csv_row(out, {"lemma2_max_violation", p.at("lemma2_samples"), p.at("lemma2_max_violation")});
    csv_row(out, {"n1_equality_max_err", p.at("n1_samples"), p.at("n1_equality_max_err")});
  } else {
    throw DomainError("render: unknown payload kind " + env.payload_kind);
  }
  return out;
}

std::string short_num(const Json& j) {
  if (j.is_null()) return "nan";
  if (j.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", j.get<double>());
    return buf;
  }
  return j.dump();
}

std::string render_text(const ReportEnvelope& env) {
  std::ostringstream out;
  out << "ratgrow " << env.version << "  [" << env.payload_kind << "]\n";
  if (env.timestamp) out << "time: " << *env.timestamp << "\n";
  const Json& p = env.payload;
  const auto flag = [](const Json& b) { return b.get<bool>() ? "pass" : "FAIL"; };
  if (env.payload_kind == "verify") {
    for (const Json& r : p.at("reports")) {
      out << r.at("theorem").get<std::string>() << "  eta=" << short_num(r.at("eta"))
          << "  factor=" << short_num(r.at("factor")) << "  min=" << short_num(r.at("min_observed"))
          << "  slack=" << short_num(r.at("slack")) << "  status=" << r.at("status").get<std::string>();
      if (r.at("status") == "checked") out << "  " << flag(r.at("pass"));
      out << "\n";
    }
  } else if (env.payload_kind == "fuzz") {
    out << "theorem " << p.at("theorem").get<std::string>() << ", trials " << p.at("trials")
        << ", checks " << p.at("counts").at("checks") << ", failures " << p.at("counts").at("failures")
        << ", errors " << p.at("counts").at("errors") << "\n";
    for (const Json& r : p.at("per_eta")) {
      out << "  eta=" << short_num(r.at("eta")) << "  checked=" << r.at("checked")
          << "  failures=" << r.at("failures") << "  min_slack=" << short_num(r.at("min_slack"))
          << "  mean_slack=" << short_num(r.at("mean_slack")) << "\n";
    }
    out << "min slack " << short_num(p.at("min_slack")) << " at trial " << p.at("min_slack_trial")
        << ", eta index " << p.at("min_slack_eta_index") << "\n";
  } else if (env.payload_kind == "compare") {
    for (const Json& r : p.at("entries")) {
      out << "eta=" << short_num(r.at("eta")) << "  " << r.at("theorem").get<std::string>()
          << "  factor=" << short_num(r.at("factor")) << "  correction=" << short_num(r.at("correction"))
          << "\n";
    }
    for (const Json& oc : p.at("orderings")) {
      out << oc.at("chain").get<std::string>() << "  eta=" << short_num(oc.at("eta"))
          << "  min_margin=" << short_num(oc.at("min_margin")) << "  " << flag(oc.at("ok"));
      if (oc.at("strict_expected").get<bool>()) out << "  strict " << flag(oc.at("strict_ok"));
      out << "\n";
    }
    out << "orderings " << flag(p.at("orderings_ok")) << "\n";
  } else if (env.payload_kind == "sharpness") {
    for (const Json& r : p.at("reports")) {
      out << r.at("family").get<std::string>() << " vs " << r.at("theorem").get<std::string>()
          << "  n=" << r.at("n") << "  eta=" << short_num(r.at("eta"))
          << "  |min-factor|=" << short_num(r.at("abs_diff")) << "  " << flag(r.at("pass")) << "\n";
    }
  } else if (env.payload_kind == "limit") {
    for (const Json& r : p.at("entries"))
      out << "|beta|=" << short_num(r.at("beta_modulus")) << "  max diff "
          << short_num(r.at("max_abs_diff")) << "\n";
    out << "monotone " << flag(p.at("monotone_decreasing")) << ", final "
        << short_num(p.at("final_diff")) << ", " << flag(p.at("pass")) << "\n";
  } else if (env.payload_kind == "lemmas") {
    out << "lemma1 max violation " << short_num(p.at("lemma1_max_violation")) << " over "
        << p.at("lemma1_samples") << " samples\n";
    out << "lemma2 max violation " << short_num(p.at("lemma2_max_violation")) << " over "
        << p.at("lemma2_samples") << " samples\n";
    out << "n=1 equality max err " << short_num(p.at("n1_equality_max_err")) << " over "
        << p.at("n1_samples") << " samples\n";
    out << flag(p.at("pass")) << "\n";
  } else {
    throw DomainError("render: unknown payload kind " + env.payload_kind);
  }
  return out.str();
}

}  // namespace

std::string render(const ReportEnvelope& env, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      Json j;
      j["version"] = env.version;
      if (env.timestamp) j["timestamp"] = *env.timestamp;
      j["config"] = env.config;
      j["payload"] = env.payload;
      return dump_canonical(j) + "\n";
    }
    case ReportFormat::Csv:
      return render_csv(env);
    case ReportFormat::Text:
      return render_text(env);
  }
  throw DomainError("render: unknown format");
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ratgrow
