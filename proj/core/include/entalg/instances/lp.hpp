#pragma once

#include "entalg/instances/common.hpp"

namespace entalg::instances {

// [[x]] = |x|_p^p on R^d for p > 1; M_G = 2^(p-1).
struct LpSpace {
  EntropyStructure<Vec> s;
  ComparisonProfile profile;
  int dim = 0;
  double p = 2.0;

  // Gateaux derivative lim t^-1 <t x, y>_a = p sum_j x_j y_j |y_j|^(p-2).
  double gateaux_derivative(const Vec& x, const Vec& y) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (y[j] == 0.0) continue;  // the limit term vanishes with x_j y_j
      acc += x[j] * y[j] * std::pow(std::fabs(y[j]), p - 2.0);
    }
    return p * acc;
  }
};

inline double lp_entropy(const Vec& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p);
  return s;
}

inline LpSpace make_lp_space(int d, double p) {
  if (d < 1) throw ConfigError("lp_space: dimension must be >= 1");
  if (!(p > 1.0)) throw ConfigError("lp_space: exponent must be > 1");
  LpSpace inst;
  inst.dim = d;
  inst.p = p;
  auto& s = inst.s;
  s.name = "lp_space(d=" + std::to_string(d) + ",p=" + std::to_string(p) + ")";
  s.entropy = [p](const Vec& x) { return lp_entropy(x, p); };
  s.dotplus = [](const Vec& a, const Vec& b) { return vec_add(a, b); };
  s.negation = [](const Vec& a) { return vec_neg(a); };
  s.label = vec_label;
  s.is_deterministic = [p, tol = s.tol](const Vec& x) { return lp_entropy(x, p) <= tol.abs; };
  s.deterministic_element = Vec(d, 0.0);
  s.sample = [d](std::mt19937_64& rng) { return random_vec(rng, d); };
  inst.profile = make_profile(0.0, std::pow(2.0, p - 1.0), +1);
  return inst;
}

}  // namespace entalg::instances
