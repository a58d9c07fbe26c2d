#include "ratgrow/generate.hpp"

#include <cmath>
#include <numbers>

namespace ratgrow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Draw-index layout within a trial block of stride 4n + 2:
//   4j     root j angle        4j + 1  root j modulus
//   4j + 2 pole j angle        4j + 3  pole j modulus
//   4n     leading-coefficient angle
std::uint64_t block_base(const GeneratorConfig& cfg, std::uint64_t trial) {
  return trial * (4u * static_cast<std::uint64_t>(cfg.n) + 2u);
}

}  // namespace

Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t trial) {
  cfg.validate();
  const std::uint64_t base = block_base(cfg, trial);
  const auto draw = [&](std::uint64_t idx) { return nth_draw01(cfg.seed, base + idx); };

  const Eigen::Index n = cfg.n;
  RootFormd rf;
  rf.roots.resize(n);
  ComplexVectord poles(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::uint64_t o = 4u * static_cast<std::uint64_t>(j);
    const double root_angle = kTwoPi * draw(o);
    const double root_mod = cfg.k + (cfg.root_modulus_max - cfg.k) * draw(o + 1);
    const double pole_angle = kTwoPi * draw(o + 2);
    const double pole_mod = (1.0 + cfg.pole_margin) +
                            (cfg.pole_modulus_max - 1.0 - cfg.pole_margin) * draw(o + 3);
    rf.roots[j] = std::polar(root_mod, root_angle);
    poles[j] = std::polar(pole_mod, pole_angle);
  }
  rf.leading = std::polar(1.0, kTwoPi * draw(4u * static_cast<std::uint64_t>(n)));

  return make_instance(rf, PoleSetd(std::move(poles)), cfg.k);
}

}  // namespace ratgrow
