#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entalg/axioms.hpp"
#include "entalg/profile.hpp"
#include "entalg/structure.hpp"

namespace entalg {

// rho_a(x, y) = a [[x .+ y]] + (1 - a) [[x o y]], unchecked.
template <typename T>
double rho(const EntropyStructure<T>& s, double a, const T& x, const T& y) {
  return a * s.dotplus_entropy(x, y) + (1.0 - a) * s.circ_entropy(x, y);
}

// Same, but a is validated against the profile's Xi. Exploration mode turns
// the violation into a flag instead of an error.
template <typename T>
double rho_checked(const EntropyStructure<T>& s, const ComparisonProfile& p, double a,
                   const T& x, const T& y, bool exploration = false,
                   bool* out_of_xi = nullptr) {
  const bool inside = p.xi.contains(a, s.tol);
  if (out_of_xi) *out_of_xi = !inside;
  if (!inside && !exploration) {
    throw OutOfXi(s.name + ": a=" + detail::num(a) + " outside Xi");
  }
  return rho(s, a, x, y);
}

// Associated hemi-scalar product <x,y>_a = sign * ([[x .+ y]] - [[x o y]]).
template <typename T>
double scalar_a(const EntropyStructure<T>& s, int sign, const T& x, const T& y) {
  return sign * (s.dotplus_entropy(x, y) - s.circ_entropy(x, y));
}

template <typename T>
double scalar_a(const EntropyStructure<T>& s, const ComparisonProfile& p, const T& x,
                const T& y) {
  return scalar_a(s, p.sign, x, y);
}

enum class ScalarVariant { kFull, kHalf };

// Canonical hemi-scalar products <.,.> = |a_sigma| <.,.>_a and <.,.>_2.
template <typename T>
double canonical_scalar(const EntropyStructure<T>& s, const ComparisonProfile& p, const T& x,
                        const T& y, ScalarVariant variant = ScalarVariant::kFull) {
  if (!p.canonical_defined())
    throw CanonicalUndefined(s.name + ": a_sigma infinite; use rho_infty");
  const double v = -p.a_sigma * (s.dotplus_entropy(x, y) - s.circ_entropy(x, y));
  return variant == ScalarVariant::kHalf ? v / 2.0 : v;
}

// Canonical hemi-metric rho_ca = [[x o y]] - <x,y>.
template <typename T>
double canonical_rho(const EntropyStructure<T>& s, const ComparisonProfile& p, const T& x,
                     const T& y) {
  if (!p.canonical_defined())
    throw CanonicalUndefined(s.name + ": a_sigma infinite; use rho_infty");
  return s.circ_entropy(x, y) - canonical_scalar(s, p, x, y);
}

// rho_infty = lim |a|^-1 rho_a, available when Xi is unbounded on one side;
// equals the associated hemi-scalar product, and vanishes identically when
// both endpoints are infinite.
template <typename T>
double rho_infty(const EntropyStructure<T>& s, const ComparisonProfile& p, const T& x,
                 const T& y) {
  const bool lo_inf = std::isinf(p.xi.lo);
  const bool hi_inf = std::isinf(p.xi.hi);
  if (!lo_inf && !hi_inf)
    throw NotApplicable(s.name + ": Xi is bounded; rho_infty undefined");
  return scalar_a(s, p, x, y);
}

enum class Correlation { kOrthogonal, kPositive, kNegative };

inline const char* to_string(Correlation c) {
  switch (c) {
    case Correlation::kOrthogonal: return "orthogonal";
    case Correlation::kPositive: return "positively_correlated";
    case Correlation::kNegative: return "negatively_correlated";
  }
  return "?";
}

// Sign of <x,y>_a with a scale-aware tie threshold |.| <= tol * max([[x o y]], 1).
template <typename T>
Correlation classify_correlation(const EntropyStructure<T>& s, const ComparisonProfile& p,
                                 const T& x, const T& y) {
  const double v = scalar_a(s, p, x, y);
  const double scale = std::max(s.circ_entropy(x, y), 1.0);
  if (std::fabs(v) <= s.tol.rel * scale) return Correlation::kOrthogonal;
  return v > 0 ? Correlation::kPositive : Correlation::kNegative;
}

// r_{x,y} = <x,y> / [[x o y]]; always <= 1.
template <typename T>
double correlation_r(const EntropyStructure<T>& s, const ComparisonProfile& p, const T& x,
                     const T& y) {
  const double denom = s.circ_entropy(x, y);
  if (denom <= s.tol.abs)
    throw DivisionByZeroEntropy(s.name + ": [[x o y]] = 0 in correlation_r");
  return canonical_scalar(s, p, x, y) / denom;
}

// Pearson form <x,y>_2 / sqrt([[x]] [[y]]).
template <typename T>
double pearson(const EntropyStructure<T>& s, const ComparisonProfile& p, const T& x,
               const T& y) {
  const double denom = s.entropy(x) * s.entropy(y);
  if (denom <= s.tol.abs)
    throw DivisionByZeroEntropy(s.name + ": [[x]][[y]] = 0 in pearson");
  return canonical_scalar(s, p, x, y, ScalarVariant::kHalf) / std::sqrt(denom);
}

// <x,y> recovered from the canonical hemi-metric through a deterministic
// element: rho_ca(x,eps) + rho_ca(y,eps) - rho_ca(x,y).
template <typename T>
double recover_scalar_from_metric(const EntropyStructure<T>& s, const ComparisonProfile& p,
                                  const T& x, const T& y, const T& eps) {
  return canonical_rho(s, p, x, eps) + canonical_rho(s, p, y, eps) - canonical_rho(s, p, x, y);
}

// Multivariate form sign * ([[x_1 .+ ... .+ x_n]] - [[x_1 o ... o x_n]]);
// reduces to the binary product at n = 2.
template <typename T>
double scalar_multi(const EntropyStructure<T>& s, const ComparisonProfile& p,
                    std::span<const T> xs) {
  if (xs.size() < 2) throw DomainError(s.name + ": scalar_multi needs n >= 2");
  T acc = xs[0];
  double circ_sum = s.entropy(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    acc = s.dotplus(acc, xs[i]);
    circ_sum += s.entropy(xs[i]);
  }
  return p.sign * (s.entropy(acc) - circ_sum);
}

// ---------------------------------------------------------------------------
// Proposition suite
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::size_t n = 10000;
  uint64_t seed = kDefaultSeed;
  std::optional<double> a;  // defaults to a canonical / interior choice
};

namespace detail {

// A finite, nonzero test coefficient inside Xi.
inline double pick_test_a(const ComparisonProfile& p) {
  if (p.canonical_defined() && std::fabs(p.a_sigma) > 1e-12) return p.a_sigma;
  return 1.0;  // [0,1] is always contained in Xi
}

}  // namespace detail

// Runs the per-tuple scalar-product and hemi-metric laws over sampled
// (x, y, v) triples. Returns one report per law; violations carry witnesses.
template <typename T>
std::vector<AxiomReport> verify_scalar_properties(const EntropyStructure<T>& s,
                                                  const ComparisonProfile& p,
                                                  const VerifyOptions& opt = {}) {
  const double a = opt.a.value_or(detail::pick_test_a(p));
  if (!p.xi.contains(a, s.tol)) throw OutOfXi(s.name + ": test coefficient outside Xi");
  if (std::fabs(a) < 1e-14) throw DomainError(s.name + ": test coefficient must be nonzero");

  AxiomReport symmetry;      symmetry.law = "scalar_symmetry_iff";
  AxiomReport self_nonneg;   self_nonneg.law = "scalar_self_nonneg";
  AxiomReport linearity;     linearity.law = "scalar_weak_linearity";
  AxiomReport det_zero;      det_zero.law = "scalar_deterministic_zero";
  AxiomReport bounds;        bounds.law = "scalar_bounds_cs0";
  AxiomReport canonical_cs;  canonical_cs.law = "canonical_scalar_bounds";
  AxiomReport rho_det;       rho_det.law = "rho_deterministic_entropy";
  AxiomReport rho_nonneg;    rho_nonneg.law = "rho_nonnegative";
  AxiomReport uncorr;        uncorr.law = "uncorrelated_equivalence";
  AxiomReport recover;       recover.law = "scalar_recovered_from_metric";
  AxiomReport multi;         multi.law = "multivariate_reduction";

  const bool have_eps = s.deterministic_element.has_value();
  const bool canonical = p.canonical_defined();
  const double sup_xi = p.xi.hi;
  const double inf_xi = p.xi.lo;

  const bool composable = s.dotplus_composable;

  for (std::size_t i = 0; i < opt.n; ++i) {
    auto rng = make_rng(opt.seed, i);
    T x, y;
    if (s.sample_pair) {
      auto pr = s.sample_pair(rng);
      x = std::move(pr.first);
      y = std::move(pr.second);
    } else {
      x = s.draw(rng);
      y = s.draw(rng);
    }
    const T v = s.draw(rng);
    const double ex = s.entropy(x);
    const double ey = s.entropy(y);
    const double dp_xy = s.dotplus_entropy(x, y);
    const double dp_yx = s.dotplus_entropy(y, x);
    const double circ_xy = s.circ_entropy(x, y);
    const double scale = std::max({1.0, std::fabs(dp_xy), std::fabs(circ_xy)});
    const double X = dp_xy - circ_xy;  // sign * <x,y>_a

    // Symmetry of the product iff symmetry of the merge entropy.
    ++symmetry.cases;
    {
      const double sxy = p.sign * (dp_xy - circ_xy);
      const double syx = p.sign * (dp_yx - s.circ_entropy(y, x));
      const bool prod_sym = s.tol.close(sxy, syx, scale);
      const bool merge_sym = s.tol.close(dp_xy, dp_yx, scale);
      if (prod_sym != merge_sym) {
        symmetry.fail_with({s.describe(x), s.describe(y)},
                           "symmetry iff violated: <x,y>=" + detail::num(sxy) +
                               " <y,x>=" + detail::num(syx));
      }
    }

    // <x,x>_* >= 0.
    ++self_nonneg.cases;
    {
      const double self = p.sign * (s.dotplus_entropy(x, x) - s.circ_entropy(x, x));
      if (!s.tol.nonneg(self, std::max(1.0, 2.0 * ex))) {
        self_nonneg.fail_with({s.describe(x)}, "<x,x>_a = " + detail::num(self));
      }
    }

    // Weak linearity <x .+ y, v> = <x, y .+ v> - <x,y> + <y,v>.
    if (composable) {
      ++linearity.cases;
      const double lhs = scalar_a(s, p.sign, s.dotplus(x, y), v);
      const double rhs = scalar_a(s, p.sign, x, s.dotplus(y, v)) -
                         p.sign * X + scalar_a(s, p.sign, y, v);
      if (!s.tol.close(lhs, rhs, scale)) {
        linearity.fail_with({s.describe(x), s.describe(y), s.describe(v)},
                            detail::num(lhs) + " vs " + detail::num(rhs));
      }
    }

    if (have_eps) {
      const T& eps = *s.deterministic_element;
      ++det_zero.cases;
      const double se = scalar_a(s, p.sign, x, eps);
      if (!s.tol.is_zero(se, std::max(1.0, ex))) {
        det_zero.fail_with({s.describe(x), s.describe(eps)}, "<x,eps>_a = " + detail::num(se));
      }
      ++rho_det.cases;
      const double rd = rho(s, a, x, eps);
      if (!s.tol.close(rd, ex, std::max(1.0, ex))) {
        rho_det.fail_with({s.describe(x), s.describe(eps)},
                          "rho_a(x,eps)=" + detail::num(rd) + " vs [[x]]=" + detail::num(ex));
      }
    }

    // The CS0 bound family, expressed through X = [[x .+ y]] - [[x o y]].
    ++bounds.cases;
    {
      bool ok = true;
      std::string what;
      if (std::isfinite(sup_xi)) {
        if (!s.tol.nonneg(circ_xy + sup_xi * X, scale)) { ok = false; what = "cs0a"; }
        if (sup_xi != 1.0 && !s.tol.nonneg(dp_xy - (1.0 - sup_xi) * X, scale)) {
          ok = false;
          what += " cs0aa";
        }
      } else if (!s.tol.nonneg(X, scale)) {
        ok = false;
        what = "cs0a(limit)";
      }
      if (std::isfinite(inf_xi)) {
        if (inf_xi != 0.0 && !s.tol.nonneg(circ_xy + inf_xi * X, scale)) {
          ok = false;
          what += " cs0b";
        }
        if (!s.tol.nonneg(dp_xy - (1.0 - inf_xi) * X, scale)) { ok = false; what += " cs0c"; }
      } else if (!s.tol.nonneg(-X, scale)) {
        ok = false;
        what = "cs0b(limit)";
      }
      if (!ok) bounds.fail_with({s.describe(x), s.describe(y)}, "violated: " + what);
    }

    if (canonical) {
      ++canonical_cs.cases;
      const double sp = -p.a_sigma * X;  // <x,y>
      bool ok = s.tol.nonneg(circ_xy - sp, scale);
      std::string what = ok ? "" : "csa";
      if (p.a_sigma < 0.0 || p.a_sigma > 1.0) {
        const double bound = p.a_sigma / (p.a_sigma - 1.0) * dp_xy;
        if (!s.tol.nonneg(bound - sp, scale)) { ok = false; what += " csb"; }
      }
      if (p.a_sigma < 0.0) {
        const bool cs2 = std::isfinite(sup_xi)
                             ? s.tol.nonneg(sup_xi * dp_xy + (1.0 - sup_xi) * circ_xy, scale)
                             : s.tol.nonneg(X, scale);
        if (!cs2) { ok = false; what += " cs2"; }
      }
      if (!ok) canonical_cs.fail_with({s.describe(x), s.describe(y)}, "violated: " + what);

      if (have_eps) {
        ++recover.cases;
        const double rec = recover_scalar_from_metric(s, p, x, y, *s.deterministic_element);
        if (!s.tol.close(rec, sp, scale)) {
          recover.fail_with({s.describe(x), s.describe(y)},
                            "recovered " + detail::num(rec) + " vs " + detail::num(sp));
        }
      }
    }

    ++rho_nonneg.cases;
    {
      const double r = rho(s, a, x, y);
      if (!s.tol.nonneg(r, scale)) {
        rho_nonneg.fail_with({s.describe(x), s.describe(y)},
                             "rho_a = " + detail::num(r) + " at a=" + detail::num(a));
      }
    }

    // Four-way equivalence for a in Xi \ {0,1}.
    if (std::fabs(a) > 1e-12 && std::fabs(a - 1.0) > 1e-12) {
      ++uncorr.cases;
      const double r = rho(s, a, x, y);
      const bool b1 = s.tol.is_zero(p.sign * X, scale);
      const bool b2 = s.tol.close(circ_xy, dp_xy, scale);
      const bool b3 = s.tol.close(r, circ_xy, scale);
      const bool b4 = s.tol.close(r, dp_xy, scale);
      if (!(b1 == b2 && b2 == b3 && b3 == b4)) {
        uncorr.fail_with({s.describe(x), s.describe(y)}, "equivalence chain broken");
      }
    }

    if (composable) {
      ++multi.cases;
      const T pair[2] = {x, y};
      const double m2 = scalar_multi(s, p, std::span<const T>(pair, 2));
      const double bin = p.sign * X;
      if (!s.tol.close(m2, bin, scale)) {
        multi.fail_with({s.describe(x), s.describe(y)},
                        "n=2 form " + detail::num(m2) + " vs " + detail::num(bin));
      }
    }
  }

  std::vector<AxiomReport> out{symmetry,  self_nonneg, linearity, det_zero, bounds,
                               canonical_cs, rho_det,  rho_nonneg, uncorr,  recover,
                               multi};
  if (!composable) {
    out[2] = AxiomReport::skipped_report("scalar_weak_linearity",
                                         "dotplus results cannot be merged again");
    out[10] = AxiomReport::skipped_report("multivariate_reduction",
                                          "dotplus results cannot be merged again");
  }
  if (!have_eps) {
    out[3] = AxiomReport::skipped_report("scalar_deterministic_zero",
                                         "no designated deterministic element");
    out[6] = AxiomReport::skipped_report("rho_deterministic_entropy",
                                         "no designated deterministic element");
    out[9] = AxiomReport::skipped_report("scalar_recovered_from_metric",
                                         "no designated deterministic element");
  }
  if (!canonical) {
    out[5] = AxiomReport::skipped_report("canonical_scalar_bounds", "a_sigma infinite");
    if (have_eps)
      out[9] = AxiomReport::skipped_report("scalar_recovered_from_metric", "a_sigma infinite");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generalized Cauchy-Schwarz
// ---------------------------------------------------------------------------

struct CauchySchwarzOptions {
  std::size_t n_pairs = 10000;      // pairs for the bound check
  std::size_t n_extremum = 256;     // sample for the c_m suprema
  std::size_t n_s_pairs = 128;      // qualifying pairs for the S estimates
  int depth = 64;                   // c_m computed for m <= depth
  int window = 8;                   // tail grid points per axis for the liminf
  uint64_t seed = kDefaultSeed;
  double stabilization_tol = 0.05;  // relative spread of c_m / m^a on the tail
};

struct CauchySchwarzReport {
  std::vector<double> c;        // c[m-1] = sup [[m x]] / [[x]]
  std::vector<double> c_minus;  // group side, same indexing; empty if no negation
  double growth_exponent = 0.0; // a with c_m ~ c * m^a on the prefix tail
  double growth_constant = 1.0;
  bool growth_condition_ok = false;
  double S_plus = std::numeric_limits<double>::quiet_NaN();
  bool S_plus_vacuous = false;
  double S_minus = std::numeric_limits<double>::quiet_NaN();
  bool S_minus_vacuous = false;
  bool has_group_side = false;
  AxiomReport plus_bound;
  AxiomReport minus_bound;
};

// Computes the c_m series, estimates S+ (and S- for groups) by the liminf
// over the tail of the prefix, and checks the two bound inequalities on all
// sampled pairs. The S estimates are estimates, never certified constants.
template <typename T>
CauchySchwarzReport verify_cauchy_schwarz(const EntropyStructure<T>& s,
                                          const ComparisonProfile& p,
                                          const CauchySchwarzOptions& opt = {}) {
  CauchySchwarzReport rep;
  rep.plus_bound.law = "cauchy_schwarz_plus";
  rep.minus_bound.law = "cauchy_schwarz_minus";
  rep.has_group_side = static_cast<bool>(s.negation);

  if (!s.dotplus_composable)
    throw DomainError(s.name + ": n-fold dotplus not available on this carrier");
  const int D = std::min(opt.depth, s.max_nfold);
  if (D < 4) throw DepthInsufficient(s.name + ": usable depth below 4");

  // c_m over a sample of non-zero-entropy elements.
  rep.c.assign(D, 0.0);
  if (rep.has_group_side) rep.c_minus.assign(D, 0.0);
  std::size_t used = 0;
  for (std::size_t i = 0; i < opt.n_extremum; ++i) {
    auto rng = make_rng(opt.seed, i);
    const T x = s.draw(rng);
    const double e = s.entropy(x);
    if (e <= s.tol.abs) continue;
    ++used;
    T acc = x;
    for (int m = 1; m <= D; ++m) {
      if (m > 1) acc = s.dotplus(acc, x);
      rep.c[m - 1] = std::max(rep.c[m - 1], s.entropy(acc) / e);
    }
    if (rep.has_group_side) {
      const T nx = s.negation(x);
      T nacc = nx;
      for (int m = 1; m <= D; ++m) {
        if (m > 1) nacc = s.dotplus(nacc, nx);
        rep.c_minus[m - 1] = std::max(rep.c_minus[m - 1], s.entropy(nacc) / e);
      }
    }
  }
  if (used == 0) throw NoValidPairs(s.name + ": no elements outside G_0 sampled");
  for (double cm : rep.c) {
    if (!std::isfinite(cm) || cm <= 0.0)
      throw DepthInsufficient(s.name + ": c_m series degenerate");
  }

  // Growth law c_m ~ c * m^a, fitted on the tail and checked for
  // stabilization over the whole tail window.
  const int half = D / 2;
  rep.growth_exponent = std::log(rep.c[D - 1] / rep.c[half - 1]) /
                        std::log(static_cast<double>(D) / half);
  double mean = 0.0;
  for (int m = half; m <= D; ++m)
    mean += rep.c[m - 1] / std::pow(static_cast<double>(m), rep.growth_exponent);
  mean /= (D - half + 1);
  rep.growth_constant = mean;
  double spread = 0.0;
  for (int m = half; m <= D; ++m) {
    const double v = rep.c[m - 1] / std::pow(static_cast<double>(m), rep.growth_exponent);
    spread = std::max(spread, std::fabs(v - mean) / std::max(mean, 1e-30));
  }
  rep.growth_condition_ok = spread <= opt.stabilization_tol;
  if (!rep.growth_condition_ok)
    throw DepthInsufficient(s.name + ": c_m / m^a did not stabilize on the prefix (spread " +
                            detail::num(spread) + ")");

  // liminf estimates over the tail window.
  auto tail_indices = [&](int count) {
    std::vector<int> idx;
    const int lo = half;
    const int step = std::max(1, (D - lo) / std::max(1, count - 1));
    for (int m = lo; m <= D; m += step) idx.push_back(m);
    if (idx.back() != D) idx.push_back(D);
    return idx;
  };
  const std::vector<int> win = tail_indices(opt.window);

  double s_plus = kInf, s_minus = kInf;
  std::size_t plus_pairs = 0, minus_pairs = 0;
  for (std::size_t i = 0; i < opt.n_s_pairs; ++i) {
    auto rng = make_rng(opt.seed + 1, i);
    const T x = s.draw(rng);
    const T y = s.draw(rng);
    const double sxy = p.sign * scalar_a(s, p.sign, x, y);  // sign * <x,y>_a
    const double base = scalar_a(s, p.sign, x, y);
    const double scale = std::max(1.0, s.circ_entropy(x, y));
    if (sxy < -s.tol.rel * scale) {
      ++plus_pairs;
      for (int m : win) {
        const T mx = s.nfold(x, m);
        for (int n : win) {
          const T ny = s.nfold(y, n);
          const double num = p.sign * (s.dotplus_entropy(mx, ny) - s.circ_entropy(mx, ny));
          s_plus = std::min(s_plus, num / (std::sqrt(rep.c[m - 1] * rep.c[n - 1]) * base));
        }
      }
    } else if (rep.has_group_side && sxy > s.tol.rel * scale) {
      ++minus_pairs;
      for (int m : win) {
        const T mx = s.nfold(x, m);
        for (int n : win) {
          const T nny = s.nfold(s.negation(y), n);
          const double num = p.sign * (s.dotplus_entropy(mx, nny) - s.circ_entropy(mx, nny));
          s_minus = std::min(
              s_minus, -num / (std::sqrt(rep.c[m - 1] * rep.c_minus[n - 1]) * base));
        }
      }
    }
  }
  rep.S_plus_vacuous = plus_pairs == 0;
  rep.S_minus_vacuous = minus_pairs == 0;
  if (!rep.S_plus_vacuous) rep.S_plus = s_plus;
  if (!rep.S_minus_vacuous && rep.has_group_side) rep.S_minus = s_minus;

  // Bound checks on the full pair sample.
  rep.plus_bound.mode = CheckMode::kSampled;
  rep.minus_bound.mode = CheckMode::kSampled;
  for (std::size_t i = 0; i < opt.n_pairs; ++i) {
    auto rng = make_rng(opt.seed + 2, i);
    const T x = s.draw(rng);
    const T y = s.draw(rng);
    const double prod = p.sign * scalar_a(s, p.sign, x, y);  // <x,y>_a * sign
    const double ent = 2.0 * std::sqrt(s.entropy(x) * s.entropy(y));
    const double scale = std::max(1.0, ent);
    if (!rep.S_plus_vacuous && rep.S_plus > 0.0) {
      ++rep.plus_bound.cases;
      if (!s.tol.nonneg(ent / rep.S_plus + prod, scale)) {
        rep.plus_bound.fail_with({s.describe(x), s.describe(y)},
                                 "-sign<x,y>_a=" + detail::num(-prod) + " > 2 sqrt/S+ =" +
                                     detail::num(ent / rep.S_plus));
      }
    }
    if (rep.has_group_side && !rep.S_minus_vacuous && rep.S_minus > 0.0) {
      ++rep.minus_bound.cases;
      if (!s.tol.nonneg(ent / rep.S_minus - prod, scale)) {
        rep.minus_bound.fail_with({s.describe(x), s.describe(y)},
                                  "sign<x,y>_a=" + detail::num(prod) + " > 2 sqrt/S- =" +
                                      detail::num(ent / rep.S_minus));
      }
    }
  }
  if (rep.S_plus_vacuous)
    rep.plus_bound = AxiomReport::skipped_report("cauchy_schwarz_plus", "S+ vacuous");
  if (!rep.has_group_side) {
    rep.minus_bound =
        AxiomReport::skipped_report("cauchy_schwarz_minus", "(G, dotplus) is not a group");
  } else if (rep.S_minus_vacuous) {
    rep.minus_bound = AxiomReport::skipped_report("cauchy_schwarz_minus", "S- vacuous");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Scaling laws (section 4)
// ---------------------------------------------------------------------------

// [[e]] rho_a(xv, yv) = [[v]] rho_a(x, y), the same for the scalar products,
// and the derived vanishing point of rho_a(x, x) when [[e .+ e]] != 2 [[e]].
template <typename T>
AxiomReport verify_scaling_laws(const EntropyStructure<T>& s, const ComparisonProfile& p,
                                const VerifyOptions& opt = {}) {
  AxiomReport r;
  r.law = "scaling_laws";
  r.mode = CheckMode::kSampled;
  if (!s.has_scale())
    return AxiomReport::skipped_report(r.law, "no scale operator");
  if (s.invariant_elements.empty())
    return AxiomReport::skipped_report(r.law, "no entropy-invariant element registered");

  const T& e = s.invariant_elements.front();
  const double ee = s.entropy(e);
  const double a = opt.a.value_or(detail::pick_test_a(p));
  const double e2 = s.dotplus_entropy(e, e);
  const bool off_diagonal = !s.tol.close(e2, 2.0 * ee, 1.0);
  const double a_zero = off_diagonal ? 1.0 / (1.0 - e2 / (2.0 * ee)) : 0.0;

  for (std::size_t i = 0; i < opt.n; ++i) {
    auto rng = make_rng(opt.seed, i);
    const T x = s.draw(rng);
    const T y = s.draw(rng);
    const T v = s.draw(rng);
    const double ev = s.entropy(v);

    ++r.cases;
    const double lhs_rho = ee * rho(s, a, s.scale(x, v), s.scale(y, v));
    const double rhs_rho = ev * rho(s, a, x, y);
    const double scale = std::max({1.0, std::fabs(lhs_rho), std::fabs(rhs_rho)});
    if (!s.tol.close(lhs_rho, rhs_rho, scale)) {
      r.fail_with({s.describe(x), s.describe(y), s.describe(v)},
                  "rho scaling: " + detail::num(lhs_rho) + " vs " + detail::num(rhs_rho));
      return r;
    }
    const double lhs_sp = ee * scalar_a(s, p.sign, s.scale(x, v), s.scale(y, v));
    const double rhs_sp = ev * scalar_a(s, p.sign, x, y);
    if (!s.tol.close(lhs_sp, rhs_sp, scale)) {
      r.fail_with({s.describe(x), s.describe(y), s.describe(v)},
                  "scalar scaling: " + detail::num(lhs_sp) + " vs " + detail::num(rhs_sp));
      return r;
    }

    if (off_diagonal) {
      const double self = rho(s, a_zero, x, x);
      if (!s.tol.is_zero(self, std::max(1.0, 2.0 * s.entropy(x)))) {
        r.fail_with({s.describe(x)},
                    "rho_a(x,x)=" + detail::num(self) + " at a=" + detail::num(a_zero));
        return r;
      }
      const double self_sp = scalar_a(s, p.sign, x, x);
      const bool zero_sp = s.tol.is_zero(self_sp, std::max(1.0, 2.0 * s.entropy(x)));
      if (zero_sp != s.zero(x)) {
        r.fail_with({s.describe(x)}, "<x,x>_a = 0 iff x in G_0 violated");
        return r;
      }
    }
  }
  if (off_diagonal) r.detail = "self-distance vanishes at a = " + detail::num(a_zero);
  return r;
}

}  // namespace entalg
