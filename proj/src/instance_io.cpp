#include "ratgrow/instance_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace ratgrow {

namespace {

double require_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError("instance: " + where + " must be a number");
  return j.get<double>();
}

Complexd parse_complex(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("instance: " + where + " must be a [re, im] pair");
  return {require_number(j[0], where + "[0]"), require_number(j[1], where + "[1]")};
}

ComplexVectord parse_complex_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("instance: " + where + " must be an array");
  ComplexVectord out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = parse_complex(j[i], where + "[" + std::to_string(i) + "]");
  return out;
}

Json complex_to_json(Complexd z) { return Json::array({z.real(), z.imag()}); }

Json complex_list_to_json(const ComplexVectord& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance: top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("instance: field n (positive integer) is required");
  const int n = j["n"].get<int>();
  if (n < 1) throw ParseError("instance: n must be >= 1");

  if (!j.contains("numerator") || !j["numerator"].is_object())
    throw ParseError("instance: field numerator (object) is required");
  const Json& num = j["numerator"];
  const bool has_coeffs = num.contains("coeffs");
  const bool has_roots = num.contains("roots");
  if (has_coeffs == has_roots)
    throw ParseError("instance: numerator needs exactly one of coeffs, roots");

  std::optional<RootFormd> roots;
  std::optional<Polynomiald> poly;
  if (has_coeffs) {
    ComplexVectord c = parse_complex_list(num["coeffs"], "numerator.coeffs");
    if (c.size() < 1) throw ParseError("instance: numerator.coeffs must be non-empty");
    poly.emplace(std::move(c));
  } else {
    const Json& rf = num["roots"];
    if (!rf.is_object() || !rf.contains("leading") || !rf.contains("roots"))
      throw ParseError("instance: numerator.roots needs fields leading and roots");
    RootFormd form;
    form.leading = parse_complex(rf["leading"], "numerator.roots.leading");
    form.roots = parse_complex_list(rf["roots"], "numerator.roots.roots");
    roots = std::move(form);
    poly.emplace(expand(*roots));
  }
  if (poly->nominal_degree() > n)
    throw ParseError("instance: numerator degree exceeds n");

  if (!j.contains("poles")) throw ParseError("instance: field poles (array) is required");
  PoleSetd poles(parse_complex_list(j["poles"], "poles"));
  if (poles.size() != 0 && poles.size() != n)
    throw ParseError("instance: pole count must be 0 or exactly n");

  std::optional<double> k;
  if (j.contains("k")) {
    const double kv = require_number(j["k"], "k");
    if (!(kv >= 1.0)) throw ParseError("instance: k must be >= 1");
    k = kv;
  }

  return Instance{n, std::move(*poly), std::move(roots), std::move(poles), k};
}

Instance instance_from_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("instance: malformed JSON");
  return instance_from_json(j);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("instance: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_text(buf.str());
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.n;
  if (inst.roots) {
    Json rf;
    rf["leading"] = complex_to_json(inst.roots->leading);
    rf["roots"] = complex_list_to_json(inst.roots->roots);
    j["numerator"] = Json{{"roots", rf}};
  } else {
    j["numerator"] = Json{{"coeffs", complex_list_to_json(inst.numerator.coeffs())}};
  }
  j["poles"] = complex_list_to_json(inst.poles.values());
  if (inst.k) j["k"] = *inst.k;
  return j;
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("instance: cannot write " + path);
  out << dump_canonical(instance_to_json(inst)) << '\n';
}

std::string instance_digest(const Instance& inst) {
  const std::string bytes = dump_canonical(instance_to_json(inst));
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ratgrow
