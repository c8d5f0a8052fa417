#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wigner/quartic.hpp"

namespace wigner {

/// Named parameter sets matching the reference figures.
struct Preset {
  std::string name;
  int mu;
  double gamma;
  double a0;
  double b0;
  double c0;

  QuarticEquilibrium equilibrium() const {
    return QuarticEquilibrium({mu, gamma}, {a0, b0, c0});
  }
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(std::string_view name);

}  // namespace wigner
