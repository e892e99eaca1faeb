#pragma once

#include "entalg/instances/common.hpp"

namespace entalg::instances {

enum class AxisDomain { kFull, kNonneg };
enum class AxisPlus { kAdd, kMax, kSignedMax };

// Scale families on a real interval: [[x]] = |x|^alpha with multiplication as
// the deterministic transformation. The dotplus choice and the domain select
// the registered constants.
struct RealAxis {
  EntropyStructure<double> s;
  ComparisonProfile profile;
  double alpha = 1.0;
  AxisDomain domain = AxisDomain::kFull;
  AxisPlus plus = AxisPlus::kAdd;
};

inline RealAxis make_real_axis(double alpha, AxisDomain domain, AxisPlus plus) {
  if (!(alpha > 0.0)) throw ConfigError("real_axis: alpha must be > 0");
  if (plus == AxisPlus::kSignedMax && domain != AxisDomain::kFull)
    throw ConfigError("real_axis: signed_max needs the full axis (use max on [0,inf))");
  RealAxis inst;
  inst.alpha = alpha;
  inst.domain = domain;
  inst.plus = plus;
  auto& s = inst.s;
  const char* dom = domain == AxisDomain::kFull ? "full" : "nonneg";
  const char* pl = plus == AxisPlus::kAdd ? "add"
                   : plus == AxisPlus::kMax ? "max"
                                            : "signed_max";
  s.name = "real_axis(alpha=" + std::to_string(alpha) + "," + dom + "," + pl + ")";
  s.entropy = [alpha](const double& x) { return std::pow(std::fabs(x), alpha); };
  switch (plus) {
    case AxisPlus::kAdd:
      s.dotplus = [](const double& a, const double& b) { return a + b; };
      break;
    case AxisPlus::kMax:
      s.dotplus = [](const double& a, const double& b) { return std::max(a, b); };
      break;
    case AxisPlus::kSignedMax:
      s.dotplus = [](const double& a, const double& b) {
        return a + (b - a) * (std::fabs(b) > std::fabs(a) ? 1.0 : 0.0);
      };
      break;
  }
  // The scale families carry a concrete non-interacting merge on [0, inf):
  // x o y = (x^alpha + y^alpha)^(1/alpha). On the full axis the magnitude is
  // determined but not the sign, so the formal pair stands in.
  if (domain == AxisDomain::kNonneg) {
    s.circ = [alpha](const double& a, const double& b) -> Merged<double> {
      return std::pow(std::pow(a, alpha) + std::pow(b, alpha), 1.0 / alpha);
    };
  }
  s.scale = [](const double& a, const double& b) { return a * b; };
  s.label = [](const double& x) { return detail::num(x); };
  s.is_deterministic = [](const double& x) { return x == 0.0; };
  s.sample = domain == AxisDomain::kFull
                 ? std::function<double(std::mt19937_64&)>([](std::mt19937_64& rng) {
                     std::uniform_real_distribution<double> u(-2.0, 2.0);
                     return u(rng);
                   })
                 : [](std::mt19937_64& rng) {
                     std::uniform_real_distribution<double> u(0.0, 2.0);
                     return u(rng);
                   };
  s.invariant_elements = {1.0};
  if (domain == AxisDomain::kFull) {
    // -1 preserves [[x .+ y]] for addition and for the absolute-value merge,
    // but not for the signed maximum, where it swaps min and max.
    if (plus != AxisPlus::kMax) s.invariant_elements.push_back(-1.0);
    if (plus == AxisPlus::kAdd) s.negation = [](const double& x) { return -x; };
  }

  const double M_pow = std::pow(2.0, std::max(alpha - 1.0, 0.0));
  const bool undet = false;
  switch (plus) {
    case AxisPlus::kAdd:
      s.deterministic_element = 0.0;
      if (domain == AxisDomain::kFull) {
        if (alpha > 1.0) {
          inst.profile = make_profile(0.0, M_pow, +1, undet, 1.0);
        } else if (alpha < 1.0) {
          inst.profile = make_profile(0.0, 1.0, -1, undet, 1.0);
        } else {
          // c_alpha = 2: the sign is undetermined; the scale family of
          // heavy-tailed location-free laws behaves like the alpha < 1 case,
          // so it resolves to -1.
          inst.profile = make_profile(0.0, 1.0, -1, /*undetermined=*/true, 1.0);
        }
      } else {
        if (alpha > 1.0) {
          inst.profile = make_profile(1.0, M_pow, +1, undet, 1.0);
        } else if (alpha < 1.0) {
          inst.profile = make_profile(std::pow(2.0, alpha - 1.0), 1.0, -1, undet, 1.0);
        } else {
          // dotplus and circ coincide; every ratio is 1.
          inst.profile = make_profile(1.0, 1.0, +1, /*undetermined=*/true, 1.0);
        }
      }
      break;
    case AxisPlus::kMax:
      if (domain == AxisDomain::kNonneg) {
        s.deterministic_element = 0.0;
        inst.profile = make_profile(0.5, 1.0, -1, undet, 1.0);
      } else {
        // On the full axis 0 fails to be dotplus-neutral against negative
        // elements; no deterministic element is designated.
        inst.profile = make_profile(0.0, 1.0, -1, undet, 1.0);
      }
      break;
    case AxisPlus::kSignedMax:
      s.deterministic_element = 0.0;
      inst.profile = make_profile(0.5, 1.0, -1, undet, 1.0);
      break;
  }
  return inst;
}

// The centered Gaussian scale family: standard deviations under independent
// addition, [[s]] = s^2, s o t = sqrt(s^2 + t^2).
inline RealAxis make_gaussian_scale() {
  RealAxis inst = make_real_axis(2.0, AxisDomain::kNonneg, AxisPlus::kAdd);
  inst.s.name = "gaussian_scale";
  return inst;
}

// The Frechet scale family for a fixed shape alpha: [[l]] = l^alpha,
// l o m = (l^alpha + m^alpha)^(1/alpha), dotplus = max.
inline RealAxis make_frechet_scale(double alpha) {
  RealAxis inst = make_real_axis(alpha, AxisDomain::kNonneg, AxisPlus::kMax);
  inst.s.name = "frechet_scale(alpha=" + std::to_string(alpha) + ")";
  return inst;
}

// The Cauchy scale family: [[l]] = |l| under addition of independent Cauchy
// variables; the comparability sign is undetermined.
inline RealAxis make_cauchy_scale() {
  RealAxis inst = make_real_axis(1.0, AxisDomain::kFull, AxisPlus::kAdd);
  inst.s.name = "cauchy_scale";
  return inst;
}

}  // namespace entalg::instances
