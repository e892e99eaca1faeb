#pragma once

#include "entalg/instances/common.hpp"

namespace entalg::instances {

// A system is a Poisson intensity; the interacting merge couples X and Y
// through a shared component of intensity nu = min(a lambda, b mu), so
// [[X .+ Y]] = lambda + mu - nu and <X,Y>_a = nu. The merged vector leaves
// the univariate carrier, so merges do not compose.
struct PoissonSystem {
  std::vector<double> lams;  // one intensity, or two after a merge

  bool simple() const { return lams.size() == 1; }
};

enum class PoissonEntropyMode { kIntensity, kShannon };

struct PoissonBivariate {
  EntropyStructure<PoissonSystem> s;
  ComparisonProfile profile;
  double a = 1.0;
  double b = 1.0;
  PoissonEntropyMode mode = PoissonEntropyMode::kIntensity;

  double coupling(double lam, double mu) const { return std::min(a * lam, b * mu); }
};

// Shannon entropy of Poisson(lambda) by truncated series; the tail beyond
// mean + 40 sqrt(mean) (and at least 60 terms) is below 1e-12.
double poisson_shannon_entropy(double lambda);

// Shannon entropy of the coupled bivariate vector (X0 + Z, Y0 + Z).
double poisson_bivariate_shannon_entropy(double lambda, double mu, double nu);

inline PoissonBivariate make_poisson_bivariate(
    double a, double b, PoissonEntropyMode mode = PoissonEntropyMode::kIntensity) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw ConfigError("poisson_bivariate: a, b must lie in [0,1]");
  PoissonBivariate inst;
  inst.a = a;
  inst.b = b;
  inst.mode = mode;
  auto& s = inst.s;
  s.name = "poisson_bivariate(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
  s.entropy = [a, b, mode](const PoissonSystem& x) {
    if (x.simple()) {
      return mode == PoissonEntropyMode::kIntensity ? x.lams[0]
                                                    : poisson_shannon_entropy(x.lams[0]);
    }
    const double lam = x.lams[0], mu = x.lams[1];
    const double nu = std::min(a * lam, b * mu);
    return mode == PoissonEntropyMode::kIntensity
               ? lam + mu - nu
               : poisson_bivariate_shannon_entropy(lam, mu, nu);
  };
  s.dotplus = [name = s.name](const PoissonSystem& x, const PoissonSystem& y) {
    if (!x.simple() || !y.simple())
      throw DomainError(name + ": merged vectors cannot be merged again");
    return PoissonSystem{{x.lams[0], y.lams[0]}};
  };
  s.dotplus_composable = false;
  s.label = [](const PoissonSystem& x) {
    return x.simple() ? "Poisson(" + detail::num(x.lams[0]) + ")"
                      : "Poisson2(" + detail::num(x.lams[0]) + "," + detail::num(x.lams[1]) + ")";
  };
  s.is_deterministic = [](const PoissonSystem& x) {
    for (double l : x.lams)
      if (l != 0.0) return false;
    return true;
  };
  s.deterministic_element = PoissonSystem{{0.0}};
  s.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 4.0);
    return PoissonSystem{{u(rng)}};
  };
  if (mode == PoissonEntropyMode::kIntensity) {
    // m_G = 1 - min{a,b}/2, attained on the diagonal lambda = mu; for ab > 0
    // the canonical coefficient is 2/min{a,b}.
    inst.profile = make_profile(1.0 - std::min(a, b) / 2.0, 1.0, -1);
  } else {
    ComparisonProfile p = make_profile(0.5, 1.0, -1);
    p.provenance = Provenance::kEstimated;
    inst.profile = p;
  }
  return inst;
}

}  // namespace entalg::instances
