#pragma once

#include <algorithm>

#include "entalg/instances/common.hpp"

namespace entalg::instances {

enum class TropicalMode { kSup, kInf };

// Nonnegative functions on a finite grid under pointwise addition.
// Sup mode: [[f]] = sup f, (m, M) = (1/2, 1), sign set to +1; the canonical
// coefficient is infinite, so rho_infty = <f,g>_a = sup(f+g) - sup f - sup g.
// Inf mode: [[f]] = inf f, Xi = [0, inf); the (min,+) product inf(f+g) is
// rho_1.
struct Tropical {
  EntropyStructure<Vec> s;
  ComparisonProfile profile;
  TropicalMode mode = TropicalMode::kSup;
  std::size_t grid = 8;

  double min_plus_product(const Vec& f, const Vec& g) const {
    double m = kInf;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::min(m, f[i] + g[i]);
    return m;
  }
};

inline Tropical make_tropical(TropicalMode mode, std::size_t grid) {
  if (grid < 1) throw ConfigError("tropical: grid must have >= 1 points");
  Tropical inst;
  inst.mode = mode;
  inst.grid = grid;
  auto& s = inst.s;
  s.name = std::string("tropical(") + (mode == TropicalMode::kSup ? "sup" : "inf") + ",grid=" +
           std::to_string(grid) + ")";
  s.entropy = mode == TropicalMode::kSup
                  ? std::function<double(const Vec&)>(
                        [](const Vec& f) { return *std::max_element(f.begin(), f.end()); })
                  : [](const Vec& f) { return *std::min_element(f.begin(), f.end()); };
  s.dotplus = [](const Vec& f, const Vec& g) { return vec_add(f, g); };
  s.label = vec_label;
  s.is_deterministic = [](const Vec& f) {
    for (double v : f)
      if (v != 0.0) return false;
    return true;
  };
  s.deterministic_element = Vec(grid, 0.0);
  s.sample = [grid, mode](std::mt19937_64& rng) {
    Vec f = random_vec(rng, grid, 0.0, 2.0);
    if (mode == TropicalMode::kInf) {
      // keep a spread of infima, including zero ones
      std::uniform_real_distribution<double> u(0.0, 1.0);
      if (u(rng) < 0.25) f[rng() % grid] = 0.0;
    }
    return f;
  };
  if (mode == TropicalMode::kSup) {
    inst.profile = make_profile(0.5, 1.0, +1, /*undetermined=*/true);
  } else {
    inst.profile = make_profile(1.0, kInf, +1, /*undetermined=*/true);
  }
  return inst;
}

}  // namespace entalg::instances
