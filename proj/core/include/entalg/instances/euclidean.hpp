#pragma once

#include "entalg/instances/common.hpp"

namespace entalg::instances {

// [[x]] = |x|^2 on R^d, dotplus = vector addition, formal merge.
// Profile (m, M, sign, a) = (0, 2, +1, -1); <x,y>_2 is the dot product and
// rho_ca(x, y) = |x - y|^2.
struct Euclidean {
  EntropyStructure<Vec> s;
  ComparisonProfile profile;
  int dim = 0;
};

inline Euclidean make_euclidean(int d, double sample_halfwidth = 1.0) {
  if (d < 1) throw ConfigError("euclidean: dimension must be >= 1");
  Euclidean inst;
  inst.dim = d;
  auto& s = inst.s;
  s.name = "euclidean(d=" + std::to_string(d) + ")";
  s.entropy = [](const Vec& x) { return squared_norm(x); };
  s.dotplus = [](const Vec& a, const Vec& b) { return vec_add(a, b); };
  s.negation = [](const Vec& a) { return vec_neg(a); };
  s.label = vec_label;
  s.is_deterministic = [tol = s.tol](const Vec& x) { return squared_norm(x) <= tol.abs; };
  s.deterministic_element = Vec(d, 0.0);
  s.sample = [d, sample_halfwidth](std::mt19937_64& rng) {
    return random_vec(rng, d, -sample_halfwidth, sample_halfwidth);
  };
  inst.profile = make_profile(0.0, 2.0, +1);
  return inst;
}

}  // namespace entalg::instances
