#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "entalg/axioms.hpp"
#include "entalg/structure.hpp"

namespace entalg {

// The interval Xi of admissible affine coefficients. Finite endpoints are
// attained; infinite ones are excluded.
struct XiInterval {
  double lo = 0.0;
  double hi = 1.0;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double a, const Tolerance& tol = {}) const {
    const double slack = tol.abs + tol.rel * std::max({1.0, std::fabs(lo), std::fabs(hi)});
    if (std::isinf(lo)) {
      if (a <= lo) return false;
    } else if (a < lo - slack) {
      return false;
    }
    if (std::isinf(hi)) {
      if (a >= hi) return false;
    } else if (a > hi + slack) {
      return false;
    }
    return true;
  }
};

// Xi = [(1-M)^-1, (1-m)^-1] with infinite endpoints excluded.
XiInterval xi_interval(double m_G, double M_G);

enum class Provenance { kClosedForm, kEstimated };

struct ComparisonProfile {
  double m_G = 0.0;
  double M_G = 1.0;
  XiInterval xi;
  int sign = +1;                 // resolved sign of [[x .+ x]] - 2[[x]]
  bool sign_was_undetermined = false;
  double a_sigma = 0.0;          // may be +-inf; canonical machinery then defers to rho_infty
  std::optional<double> e_entropy;  // [[e]] for scaling laws, when registered
  Provenance provenance = Provenance::kClosedForm;
  std::size_t sample_size = 0;
  uint64_t seed = 0;

  double sup_xi() const { return xi.hi; }
  double inf_xi() const { return xi.lo; }
  bool canonical_defined() const { return std::isfinite(a_sigma); }
};

// a_{-1} = 1/(1-m), a_{+1} = 1/(1-M); infinite when the denominator vanishes.
double canonical_coefficient(int sign, double m_G, double M_G);

ComparisonProfile make_profile(double m_G, double M_G, int sign,
                               bool undetermined = false,
                               std::optional<double> e_entropy = std::nullopt);

nlohmann::json to_json(const ComparisonProfile& p);
ComparisonProfile profile_from_json(const nlohmann::json& j);

struct BoundsEstimate {
  double m_hat = kInf;    // upper bound for m_G
  double M_hat = 0.0;     // lower bound for M_G
  std::size_t pairs = 0;  // pairs with [[x o y]] > 0
  // Sampled estimates are one-sided: M_hat <= M_G and m_hat >= m_G.
  bool one_sided = true;
};

struct BoundsOptions {
  std::size_t n = 10000;
  uint64_t seed = kDefaultSeed;
  double diagonal_fraction = 0.1;   // directed pairs (x, x)
  double antipodal_fraction = 0.0;  // directed pairs (x, -x) when negation exists
};

// sup/inf of [[x .+ y]] / [[x o y]] over sampled pairs with [[x o y]] > 0.
// Deterministic in (n, seed); merge order-independent.
template <typename T>
BoundsEstimate estimate_bounds(const EntropyStructure<T>& s, const BoundsOptions& opt) {
  if (!s.has_dotplus()) throw DomainError(s.name + ": dotplus operator not defined");
  if (!s.has_sampler()) throw DomainError(s.name + ": no sampler registered");
  struct Acc {
    double lo = kInf;
    double hi = 0.0;
    std::size_t pairs = 0;
  };
  const std::size_t n_diag = static_cast<std::size_t>(opt.diagonal_fraction * opt.n);
  const std::size_t n_anti =
      s.negation ? static_cast<std::size_t>(opt.antipodal_fraction * opt.n) : 0;
  Acc acc = parallel_reduce_indexed<Acc>(
      opt.n, Acc{},
      [&](std::size_t i) {
        auto rng = make_rng(opt.seed, i);
        Acc a;
        if (s.sample_pair) {
          auto [px, py] = s.sample_pair(rng);
          const double denom = s.circ_entropy(px, py);
          if (denom > s.tol.abs) {
            const double ratio = s.dotplus_entropy(px, py) / denom;
            a.lo = ratio;
            a.hi = ratio;
            a.pairs = 1;
          }
          return a;
        }
        T x = s.draw(rng);
        T y = i < n_diag            ? x
              : (i < n_diag + n_anti ? s.negation(x)
                                     : s.draw(rng));
        const double denom = s.circ_entropy(x, y);
        if (!std::isfinite(denom)) throw DomainError(s.name + ": infinite entropy in bounds");
        if (denom > s.tol.abs) {
          const double ratio = s.dotplus_entropy(x, y) / denom;
          a.lo = ratio;
          a.hi = ratio;
          a.pairs = 1;
        }
        return a;
      },
      [](Acc l, Acc r) {
        l.lo = std::min(l.lo, r.lo);
        l.hi = std::max(l.hi, r.hi);
        l.pairs += r.pairs;
        return l;
      });
  if (acc.pairs == 0) throw NoValidPairs(s.name + ": every sampled pair had [[x o y]] = 0");
  BoundsEstimate est;
  est.m_hat = std::min(acc.lo, 1.0);  // pairs with a deterministic side pin both bounds at 1
  est.M_hat = std::max(acc.hi, 1.0);
  est.pairs = acc.pairs;
  return est;
}

// Estimated profile: bounds from sampling, sign from check_comparable, the
// undetermined case resolved by `undetermined_sign` (default +1).
template <typename T>
ComparisonProfile estimate_profile(const EntropyStructure<T>& s, const BoundsOptions& opt,
                                   int undetermined_sign = +1) {
  const BoundsEstimate est = estimate_bounds(s, opt);
  const std::vector<T> sample = draw_sample(s, std::min<std::size_t>(opt.n, 2000), opt.seed + 1);
  const ComparableSign cs = check_comparable(s, sample);
  const int sign = cs.undetermined ? undetermined_sign : cs.sign;
  ComparisonProfile p = make_profile(est.m_hat, est.M_hat, sign, cs.undetermined);
  p.provenance = Provenance::kEstimated;
  p.sample_size = opt.n;
  p.seed = opt.seed;
  return p;
}

}  // namespace entalg
