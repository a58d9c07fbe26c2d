#ifndef RATGROW_INSTANCE_IO_HPP
#define RATGROW_INSTANCE_IO_HPP

#include <string>

#include "ratgrow/instance.hpp"
#include "ratgrow/jsonio.hpp"

namespace ratgrow {

/// Instance file schema: object with fields
///   n          positive integer
///   numerator  {"coeffs": [[re,im],...]} (index 0 = constant term)
///              or {"roots": {"leading": [re,im], "roots": [[re,im],...]}}
///   poles      [[re,im],...] (empty for polynomial instances, else exactly n)
///   k          optional real >= 1
Instance instance_from_json(const Json& j);
Instance instance_from_text(const std::string& text);
Instance load_instance(const std::string& path);

/// Canonical object form: roots form when known, coeffs otherwise; k omitted
/// when absent. Round-trips every double exactly.
Json instance_to_json(const Instance& inst);

void save_instance(const Instance& inst, const std::string& path);

}  // namespace ratgrow

#endif  // RATGROW_INSTANCE_IO_HPP
