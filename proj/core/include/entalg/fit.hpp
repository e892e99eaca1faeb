#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "entalg/comparison.hpp"
#include "entalg/instances/shannon.hpp"
#include "entalg/instances/tichonov.hpp"

namespace entalg::fit {

using instances::Vec;

struct FitSettings {
  int grid_per_dim = 15;
  int nelder_mead_iters = 600;
  int polish_passes = 3;
  double x_tol = 1e-12;
};

struct FitResult {
  Vec theta;
  double value = 0.0;
  bool on_boundary = false;
  std::size_t evaluations = 0;
};

// Derivative-free minimizer: coarse lexicographic grid (smallest theta wins
// ties), a bounded Nelder-Mead refinement, then per-coordinate parabolic
// polish. Deterministic given the settings.
FitResult minimize_box(const std::function<double(const Vec&)>& f, const Vec& lo, const Vec& hi,
                       const FitSettings& settings = {});

template <typename T>
struct FitProblem {
  const EntropyStructure<T>* structure = nullptr;
  ComparisonProfile profile;
  T data;
  std::function<T(const Vec&)> family;
  Vec lo, hi;
  double a = -1.0;
  bool exploration = false;
  FitSettings settings;
};

// Minimizes theta -> rho_a(data, family(theta)) over the box.
template <typename T>
FitResult fit_min_rho(const FitProblem<T>& problem) {
  const auto& s = *problem.structure;
  if (!problem.profile.xi.contains(problem.a, s.tol) && !problem.exploration)
    throw OutOfXi(s.name + ": fit coefficient outside Xi (use exploration mode)");
  const bool a_in_xi = problem.profile.xi.contains(problem.a, s.tol);
  auto objective = [&](const Vec& theta) {
    const double v = rho(s, problem.a, problem.data, problem.family(theta));
    if (std::isnan(v)) throw NonFiniteObjective(s.name + ": objective is NaN");
    return v;
  };
  FitResult res = minimize_box(objective, problem.lo, problem.hi, problem.settings);
  if (a_in_xi && res.value < -s.tol.abs - s.tol.rel * std::max(1.0, std::fabs(res.value)))
    throw NonFiniteObjective(s.name + ": negative risk at a in Xi");
  return res;
}

struct MleResult {
  Vec theta;
  double cross_entropy = 0.0;
  bool on_boundary = false;
};

// Maximum likelihood as canonical-risk minimization in the reliability
// structure: minimizes [[ (p_theta, 0) .+ (p~, 1) ]] = -sum p~_x log p_theta_x.
MleResult mle_fit(const Vec& p_tilde, const std::function<Vec(const Vec&)>& family, const Vec& lo,
                  const Vec& hi, const FitSettings& settings = {});

struct TichonovFitResult {
  Vec beta_ridge;
  Vec beta_rho;
  double max_abs_diff = 0.0;
};

// Ridge closed form X^T y / (1 + lambda) against the rho_a minimizer at
// a = -1/(1 + lambda).
TichonovFitResult tichonov_fit(const instances::TichonovModel& model, double lambda,
                               const FitSettings& settings = {});

}  // namespace entalg::fit
