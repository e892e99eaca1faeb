#pragma once

#include <functional>

#include "entalg/instances/common.hpp"

namespace entalg::instances {

// A variogram entropy on R^d: [[x]] = gamma(x) with gamma(0) = 0 and
// (x, y) -> gamma(x - y) negative definite; dotplus is subtraction, so
// rho_ca(x, y) = gamma(x - y) and <x,y> = gamma(x) + gamma(y) - gamma(x - y).
struct VariogramStructure {
  EntropyStructure<Vec> s;
  ComparisonProfile profile;
  int dim = 0;
};

// Power variogram gamma(h) = |h|^beta, beta in (0, 2].
inline VariogramStructure make_power_variogram(int d, double beta) {
  if (d < 1) throw ConfigError("variogram: dimension must be >= 1");
  if (!(beta > 0.0 && beta <= 2.0)) throw ConfigError("variogram: beta must lie in (0,2]");
  VariogramStructure inst;
  inst.dim = d;
  auto& s = inst.s;
  s.name = "variogram(|h|^" + std::to_string(beta) + ",d=" + std::to_string(d) + ")";
  s.entropy = [beta](const Vec& x) { return std::pow(squared_norm(x), beta / 2.0); };
  s.dotplus = [](const Vec& a, const Vec& b) { return vec_sub(a, b); };
  s.negation = [](const Vec& a) { return vec_neg(a); };
  s.label = vec_label;
  s.is_deterministic = [tol = s.tol](const Vec& x) { return squared_norm(x) <= tol.abs; };
  s.deterministic_element = Vec(d, 0.0);
  s.sample = [d](std::mt19937_64& rng) { return random_vec(rng, d); };
  // M_G = max(1, 2^(beta-1)): the power variogram is subadditive for
  // beta <= 1 and peaks at antipodal pairs otherwise.
  inst.profile = make_profile(0.0, std::max(1.0, std::pow(2.0, beta - 1.0)), -1);
  return inst;
}

// Custom variogram with registered sup of gamma(x-y)/(gamma(x)+gamma(y)).
inline VariogramStructure make_variogram(int d, std::function<double(const Vec&)> gamma,
                                         double M_G, const std::string& tag) {
  if (d < 1) throw ConfigError("variogram: dimension must be >= 1");
  VariogramStructure inst;
  inst.dim = d;
  auto& s = inst.s;
  s.name = "variogram(" + tag + ",d=" + std::to_string(d) + ")";
  s.entropy = [g = std::move(gamma)](const Vec& x) { return g(x); };
  s.dotplus = [](const Vec& a, const Vec& b) { return vec_sub(a, b); };
  s.negation = [](const Vec& a) { return vec_neg(a); };
  s.label = vec_label;
  s.deterministic_element = Vec(d, 0.0);
  s.is_deterministic = [tol = s.tol](const Vec& x) { return squared_norm(x) <= tol.abs; };
  s.sample = [d](std::mt19937_64& rng) { return random_vec(rng, d); };
  inst.profile = make_profile(0.0, M_G, -1);
  return inst;
}

}  // namespace entalg::instances
