#pragma once

#include "entalg/instances/shannon.hpp"

namespace entalg::instances {

// Tsallis / Sharma-Mittal entropies with the product pmf as the interacting
// merge: [[p x p']] = [[p]] + [[p']] - ((q-1)/k) [[p]] [[p']].
struct PowerEntropy {
  EntropyStructure<Vec> s;
  ComparisonProfile profile;
  double q = 2.0;
  double k = 1.0;
  bool sharma_mittal = false;

  double interaction_coefficient() const { return (q - 1.0) / k; }
};

inline double tsallis_entropy(const Vec& p, double q, double k) {
  double pw = 0.0;
  for (double v : p) pw += std::pow(v, q);
  return k / (q - 1.0) * (1.0 - pw);
}

inline double sharma_mittal_entropy(const Vec& p, double q, double k) {
  double pw = 0.0;
  for (double v : p) pw += std::pow(v, q);
  return k / (q - 1.0) * (1.0 - std::pow(pw, 1.0 / k));
}

inline PowerEntropy make_power_entropy(double q, double k, bool sharma_mittal) {
  if (q == 1.0) throw ConfigError("tsallis: q = 1 is the Shannon limit; use shannon_concat");
  if (!(k > 0.0)) throw ConfigError("tsallis: k must be > 0");
  PowerEntropy inst;
  inst.q = q;
  inst.k = k;
  inst.sharma_mittal = sharma_mittal;
  auto& s = inst.s;
  s.name = std::string(sharma_mittal ? "sharma_mittal" : "tsallis") + "(q=" +
           std::to_string(q) + ",k=" + std::to_string(k) + ")";
  s.entropy = sharma_mittal
                  ? std::function<double(const Vec&)>(
                        [q, k](const Vec& p) { return sharma_mittal_entropy(p, q, k); })
                  : [q, k](const Vec& p) { return tsallis_entropy(p, q, k); };
  s.dotplus = [](const Vec& a, const Vec& b) { return product_pmf(a, b); };
  s.label = vec_label;
  s.is_deterministic = [](const Vec& p) {
    for (double v : p)
      if (v != 0.0 && v != 1.0) return false;
    return true;
  };
  s.deterministic_element = Vec{1.0};
  s.sample = [](std::mt19937_64& rng) { return random_pmf(rng, 2, 4); };
  // Product pmfs grow exponentially; deep n-fold merges are capped.
  s.max_nfold = 8;
  const int sign = q > 1.0 ? -1 : +1;
  // For q > 1 the entropy is bounded by k/(q-1), which pins the relative
  // noise content to [1/2, 1]; for q < 1 it is unbounded and the estimated
  // side is reported instead of a closed form.
  ComparisonProfile prof;
  if (q > 1.0) {
    prof = make_profile(0.5, 1.0, sign);
  } else {
    prof = make_profile(1.0, kInf, sign);
  }
  prof.provenance = Provenance::kEstimated;  // bounds are supremum limits, not attained
  inst.profile = prof;
  return inst;
}

inline PowerEntropy make_tsallis(double q, double k) { return make_power_entropy(q, k, false); }
inline PowerEntropy make_sharma_mittal(double q, double k) {
  return make_power_entropy(q, k, true);
}

}  // namespace entalg::instances
