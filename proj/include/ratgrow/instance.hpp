#ifndef RATGROW_INSTANCE_HPP
#define RATGROW_INSTANCE_HPP

#include <optional>
#include <string>
#include <utility>

#include "ratgrow/complex_poly.hpp"
#include "ratgrow/rational.hpp"

namespace ratgrow {

/// A concrete test subject: a numerator (with its factored form when known)
/// and a prescribed pole set. Polynomial-only instances carry an empty pole
/// set. k is the zero-exclusion radius the instance was built or declared for.
struct Instance {
  int n = 0;
  Polynomiald numerator;
  std::optional<RootFormd> roots;
  PoleSetd poles;
  std::optional<double> k;
};

inline Instance make_instance(const RootFormd& roots, PoleSetd poles, std::optional<double> k = std::nullopt) {
  Instance inst{static_cast<int>(roots.roots.size()), expand(roots), roots, std::move(poles), k};
  return inst;
}

inline RationalFunctiond to_rational(const Instance& inst) {
  return RationalFunctiond(inst.numerator, inst.poles);
}

/// FNV-1a hash of the canonical serialized instance, as 16 hex digits.
/// Defined alongside the serializer so the digest tracks the byte format.
std::string instance_digest(const Instance& inst);

}  // namespace ratgrow

#endif  // RATGROW_INSTANCE_HPP
