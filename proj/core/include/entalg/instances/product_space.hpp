#pragma once

#include <cstdint>

#include "entalg/instances/common.hpp"

namespace entalg::instances {

// Truncated cylinders over a finite probability space: an element is a list
// of event masks, [[A_1 x ... x A_k x Omega^inf]] = -sum log P(A_i), and the
// non-interacting merge concatenates the coordinate lists. The entropy is
// infinite on null events; this structure carries no dotplus.
struct ProductSpace {
  using Cylinder = std::vector<uint32_t>;

  EntropyStructure<Cylinder> s;
  Vec atom_weights;

  double event_probability(uint32_t mask) const {
    double p = 0.0;
    for (std::size_t i = 0; i < atom_weights.size(); ++i)
      if (mask & (uint32_t{1} << i)) p += atom_weights[i];
    return p;
  }
};

inline ProductSpace make_product_space(Vec atom_weights) {
  if (atom_weights.empty() || atom_weights.size() > 20)
    throw ConfigError("product_space: atom count must be in [1, 20]");
  double total = 0.0;
  for (double w : atom_weights) {
    if (w < 0.0) throw ConfigError("product_space: negative atom weight");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-9) throw ConfigError("product_space: weights must sum to 1");
  ProductSpace inst;
  inst.atom_weights = std::move(atom_weights);
  auto& s = inst.s;
  const std::size_t n = inst.atom_weights.size();
  const uint32_t full = (uint32_t{1} << n) - 1;
  s.name = "product_space(atoms=" + std::to_string(n) + ")";
  s.entropy = [w = inst.atom_weights](const ProductSpace::Cylinder& c) {
    double h = 0.0;
    for (uint32_t mask : c) {
      double p = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (mask & (uint32_t{1} << i)) p += w[i];
      if (p <= 0.0) return kInf;
      h -= std::log(p);
    }
    return h;
  };
  s.circ = [](const ProductSpace::Cylinder& a,
              const ProductSpace::Cylinder& b) -> Merged<ProductSpace::Cylinder> {
    ProductSpace::Cylinder out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  s.label = [](const ProductSpace::Cylinder& c) {
    std::string out = "cyl(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += "x";
      out += std::to_string(c[i]);
    }
    return out + ")";
  };
  s.is_deterministic = [w = inst.atom_weights](const ProductSpace::Cylinder& c) {
    for (uint32_t mask : c) {
      double p = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (mask & (uint32_t{1} << i)) p += w[i];
      if (p < 1.0 - 1e-12) return false;
    }
    return true;
  };
  s.deterministic_element = ProductSpace::Cylinder{full};
  s.sample = [n, full](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(1, 3);
    ProductSpace::Cylinder c(len(rng));
    for (auto& mask : c) {
      mask = static_cast<uint32_t>(rng()) & full;
      if (mask == 0) mask = full;  // keep probabilities positive
    }
    return c;
  };
  return inst;
}

}  // namespace entalg::instances
