#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "entalg/comparison.hpp"
#include "entalg/structure.hpp"

namespace entalg::construction {

// A nonnegative, non-constant kernel vanishing on the diagonal.
template <typename T>
struct ScoringRule {
  std::function<double(const T&, const T&)> S;  // S(eta, xi)
  T omega;                                      // reference point for embeddings
  std::function<std::string(const T&)> label;
};

// (eta, xi) -> r_a(eta, xi) - r_a(xi, xi) with
// r_a(eta, xi) = a [[eta .+ xi]] + (1 - a)([[xi]] + [[eta]]).
// Membership of a in the admissible set A is checked on the sample.
template <typename T>
ScoringRule<T> scoring_rule_from_structure(const EntropyStructure<T>& s, double a,
                                           const std::vector<T>& sample, T omega) {
  for (const T& xi : sample) {
    for (const T& eta : sample) {
      const double lhs = a * (s.dotplus_entropy(eta, xi) - s.dotplus_entropy(xi, xi) +
                              s.entropy(xi) - s.entropy(eta));
      const double rhs = s.entropy(xi) - s.entropy(eta);
      if (lhs < rhs - s.tol.abs - s.tol.rel * std::max(1.0, std::fabs(rhs)))
        throw NotInA(s.name + ": a=" + detail::num(a) + " fails the A-membership at (" +
                     s.describe(eta) + ", " + s.describe(xi) + ")");
    }
  }
  ScoringRule<T> rule;
  rule.omega = std::move(omega);
  rule.label = s.label;
  rule.S = [&s, a](const T& eta, const T& xi) {
    const double r_ex = a * s.dotplus_entropy(eta, xi) + (1.0 - a) * (s.entropy(xi) + s.entropy(eta));
    const double r_xx = a * s.dotplus_entropy(xi, xi) + (1.0 - a) * 2.0 * s.entropy(xi);
    return r_ex - r_xx;
  };
  return rule;
}

// Product-carrier embedding of a proper scoring rule: a left-neutral merge on
// G x G and the entropy [[ (eta, xi) ]] = a^-1 S(eta, xi) +
// (1 - a^-1)(S(omega, eta) + S(omega, xi)) for a strictly below the ratio
// bound; then rho_a((omega, eta), (omega, xi)) = S(eta, xi).
template <typename T>
struct EmbeddedStructure {
  EntropyStructure<std::pair<T, T>> s;
  double a = -1.0;
  double ratio_sup = 0.0;
  T omega;

  std::pair<T, T> lift(const T& x) const { return {omega, x}; }

  // rho_a on lifted points; recovers the rule.
  double rho_lifted(const T& eta, const T& xi) const {
    return rho(s, a, lift(eta), lift(xi));
  }
};

struct EmbedOptions {
  double margin_floor = 0.5;   // margin = max(floor, fraction * ratio_sup)
  double margin_fraction = 0.05;
  double ratio_cap = 1e6;      // past this the supremum is treated as unbounded
};

template <typename T>
EmbeddedStructure<T> embed_scoring_rule(const ScoringRule<T>& rule,
                                        const std::vector<std::pair<T, T>>& probes,
                                        const EmbedOptions& opt = {},
                                        std::function<bool(const T&, const T&)> eq =
                                            [](const T& x, const T& y) { return x == y; }) {
  double ratio_sup = 0.0;
  const Tolerance tol;
  for (const auto& [eta, xi] : probes) {
    const double s = rule.S(eta, xi);
    if (s <= tol.abs) continue;
    const double denom = rule.S(rule.omega, eta) + rule.S(rule.omega, xi);
    if (denom <= tol.abs || s / denom > opt.ratio_cap)
      throw SupUnbounded("embed_scoring_rule: ratio above cap at a probe pair");
    ratio_sup = std::max(ratio_sup, s / denom);
  }
  if (ratio_sup <= 0.0)
    throw DomainError("embed_scoring_rule: the rule vanishes on every probe pair");

  EmbeddedStructure<T> out;
  out.ratio_sup = ratio_sup;
  // The admissibility bound a < 1 - ratio_sup is strict; a definite margin
  // keeps the embedding deterministic.
  out.a = (1.0 - ratio_sup) - std::max(opt.margin_floor, opt.margin_fraction * ratio_sup);
  out.omega = rule.omega;

  auto& s = out.s;
  s.name = "embedded_scoring_rule";
  const T omega = rule.omega;
  const double a = out.a;
  s.entropy = [S = rule.S, omega, a](const std::pair<T, T>& p) {
    return S(p.first, p.second) / a +
           (1.0 - 1.0 / a) * (S(omega, p.first) + S(omega, p.second));
  };
  s.dotplus = [omega, eq](const std::pair<T, T>& x, const std::pair<T, T>& y) {
    if (eq(x.first, omega) && eq(x.second, omega)) return y;
    if (!eq(x.first, omega)) return std::make_pair(x.first, y.second);
    return std::make_pair(x.second, y.second);
  };
  s.dotplus_left_neutral = true;
  s.dotplus_right_neutral = false;  // (omega, omega) is left-neutral only
  s.deterministic_element = std::make_pair(omega, omega);
  if (rule.label) {
    s.label = [lab = rule.label](const std::pair<T, T>& p) {
      return "(" + lab(p.first) + "|" + lab(p.second) + ")";
    };
  }
  return out;
}

}  // namespace entalg::construction
