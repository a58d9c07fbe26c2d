#ifndef RATGROW_GENERATE_HPP
#define RATGROW_GENERATE_HPP

#include <cstdint>

#include "ratgrow/instance.hpp"
#include "ratgrow/rational.hpp"

namespace ratgrow {

/// SplitMix64 stream. Fixed-width integer arithmetic only, so draws are
/// identical across platforms and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// The stream value at 0-based position idx of the seed's SplitMix64 sequence,
/// computed in O(1). Lets every random quantity own a fixed draw index, so
/// results do not depend on evaluation order.
inline std::uint64_t nth_draw(std::uint64_t seed, std::uint64_t idx) {
  SplitMix64 g(seed + idx * 0x9e3779b97f4a7c15ULL);
  return g.next();
}

inline double nth_draw01(std::uint64_t seed, std::uint64_t idx) {
  return static_cast<double>(nth_draw(seed, idx) >> 11) * 0x1.0p-53;
}

/// Sampling box for random instances satisfying the growth-bound hypotheses:
/// root moduli in [k, root_modulus_max), pole moduli in
/// [1 + pole_margin, pole_modulus_max), angles uniform.
struct GeneratorConfig {
  int n = 1;
  double k = 1.0;
  double root_modulus_max = 5.0;
  double pole_margin = kDefaultPoleMargin;
  double pole_modulus_max = 10.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 1) throw DomainError("GeneratorConfig: n must be >= 1");
    if (!(k >= 1.0)) throw DomainError("GeneratorConfig: k must be >= 1");
    if (!(pole_margin > 0.0)) throw DomainError("GeneratorConfig: pole_margin must be positive");
    if (!(root_modulus_max > k)) throw DomainError("GeneratorConfig: root_modulus_max must exceed k");
    if (!(pole_modulus_max > 1.0 + pole_margin))
      throw DomainError("GeneratorConfig: pole_modulus_max must exceed 1 + pole_margin");
  }
};

/// Draws the instance for the given trial of the config's seed. Leading
/// coefficient on the unit circle; every draw has a fixed stream index, so
/// trials may be generated in any order.
Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t trial = 0);

}  // namespace ratgrow

#endif  // RATGROW_GENERATE_HPP
