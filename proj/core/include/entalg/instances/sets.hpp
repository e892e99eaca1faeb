#pragma once

#include <bit>
#include <cstdint>

#include "entalg/finite_structure.hpp"
#include "entalg/instances/common.hpp"

namespace entalg::instances {

using SubsetMask = uint32_t;

// Subsets of a weighted finite ground set: [[A]] = mu(A), dotplus = union,
// formal merge. Profile (1/2, 1, -1, 2); <A,B>_2 = mu(A n B) and
// rho_ca(A, B) = mu(A delta B).
struct FiniteMeasureSets {
  EntropyStructure<SubsetMask> s;
  ComparisonProfile profile;
  Vec weights;

  double measure(SubsetMask a) const {
    double m = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (a & (SubsetMask{1} << i)) m += weights[i];
    return m;
  }
  SubsetMask full() const { return (SubsetMask{1} << weights.size()) - 1; }
};

inline FiniteMeasureSets make_finite_measure_sets(Vec weights) {
  if (weights.empty() || weights.size() > 20)
    throw ConfigError("finite_measure_sets: ground set size must be in [1, 20]");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ConfigError("finite_measure_sets: weights must be >= 0");
    total += w;
  }
  if (total <= 0.0) throw ConfigError("finite_measure_sets: weights must not all vanish");
  FiniteMeasureSets inst;
  inst.weights = std::move(weights);
  auto& s = inst.s;
  const std::size_t n = inst.weights.size();
  s.name = "finite_measure_sets(n=" + std::to_string(n) + ")";
  s.entropy = [w = inst.weights](const SubsetMask& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (a & (SubsetMask{1} << i)) m += w[i];
    return m;
  };
  s.dotplus = [](const SubsetMask& a, const SubsetMask& b) { return a | b; };
  s.label = [](const SubsetMask& a) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if (a & (SubsetMask{1} << i)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
      }
    return out + "}";
  };
  s.is_deterministic = [](const SubsetMask& a) { return a == 0; };
  s.deterministic_element = SubsetMask{0};
  s.sample = [n](std::mt19937_64& rng) {
    return static_cast<SubsetMask>(rng() & ((SubsetMask{1} << n) - 1));
  };
  inst.profile = make_profile(0.5, 1.0, -1);
  return inst;
}

// Explicit-table export of the same structure (2^n elements).
inline FiniteStructure sets_finite_structure(const Vec& weights) {
  if (weights.empty() || weights.size() > 12)
    throw ConfigError("sets_finite_structure: ground set size must be in [1, 12]");
  const auto inst = make_finite_measure_sets(weights);
  const std::size_t n = SubsetMask{1} << weights.size();
  FiniteStructure fs;
  fs.elements.reserve(n);
  fs.entropy.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    fs.elements.push_back(inst.s.describe(static_cast<SubsetMask>(a)));
    fs.entropy.push_back(inst.measure(static_cast<SubsetMask>(a)));
  }
  fs.dotplus_table.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) fs.dotplus_table[a][b] = static_cast<int>(a | b);
  for (std::size_t a = 0; a < n; ++a)
    if (inst.measure(static_cast<SubsetMask>(a)) == 0.0)
      fs.zero_indices.push_back(static_cast<int>(a));
  fs.deterministic_indices.push_back(0);
  fs.validate();
  return fs;
}

}  // namespace entalg::instances
