#ifndef RATGROW_JSONIO_HPP
#define RATGROW_JSONIO_HPP

#include <json.hpp>

#include <string>

namespace ratgrow {

/// Object keys live in a std::map, so iteration (and thus serialization)
/// is alphabetical by construction.
using Json = nlohmann::json;

/// Shortest-of-17-significant-digits decimal rendering of a double ("%.17g"),
/// with -0 normalized to 0. NaN and infinities render as "null": they mark
/// fields that carry no value (e.g. slack of an unchecked report).
std::string fmt_double17(double x);

/// Compact single-line serialization with sorted keys and every floating
/// number rendered by fmt_double17. Same value, same bytes, on every platform.
std::string dump_canonical(const Json& j);

}  // namespace ratgrow

#endif  // RATGROW_JSONIO_HPP
