#include "entalg/fit.hpp"

#include <cmath>

namespace entalg::fit {

namespace {

Vec clamp_box(Vec x, const Vec& lo, const Vec& hi) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
  return x;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// One parabolic-interpolation step per coordinate, repeated; exact on
// quadratic slices.
void coordinate_polish(const std::function<double(const Vec&)>& f, Vec& x, double& fx,
                       const Vec& lo, const Vec& hi, int passes, std::size_t& evals) {
  for (int pass = 0; pass < passes; ++pass) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double span = hi[i] - lo[i];
      double h = std::max(1e-4 * span, 1e-8);
      for (int inner = 0; inner < 8; ++inner) {
        Vec xm = x, xp = x;
        xm[i] = std::max(lo[i], x[i] - h);
        xp[i] = std::min(hi[i], x[i] + h);
        const double fm = f(xm), fp = f(xp);
        evals += 2;
        const double hm = x[i] - xm[i], hp = xp[i] - x[i];
        if (hm <= 0.0 || hp <= 0.0) break;
        // vertex of the interpolating parabola through (x-hm, fm),(x, fx),(x+hp, fp)
        const double denom = hm * (fp - fx) + hp * (fm - fx);
        if (denom <= 0.0) {
          // flat or concave slice; fall back to the better neighbor
          if (fm < fx) {
            x = xm;
            fx = fm;
          } else if (fp < fx) {
            x = xp;
            fx = fp;
          } else {
            h *= 0.25;
            continue;
          }
          continue;
        }
        const double step = 0.5 * (hm * hm * (fp - fx) - hp * hp * (fm - fx)) / denom;
        Vec xn = x;
        xn[i] = std::clamp(x[i] - step, lo[i], hi[i]);
        const double fn = f(xn);
        ++evals;
        if (fn < fx) {
          x = xn;
          fx = fn;
        }
        h *= 0.25;
        if (h < 1e-12 * std::max(1.0, std::fabs(x[i]))) break;
      }
    }
  }
}

}  // namespace

FitResult minimize_box(const std::function<double(const Vec&)>& f, const Vec& lo, const Vec& hi,
                       const FitSettings& settings) {
  if (lo.size() != hi.size() || lo.empty())
    throw DomainError("minimize_box: inconsistent box");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) throw DomainError("minimize_box: degenerate box");
  const std::size_t d = lo.size();
  FitResult res;

  // Coarse grid, lexicographic order; smallest theta wins ties.
  const int g = std::max(2, settings.grid_per_dim);
  std::vector<int> idx(d, 0);
  Vec best;
  double best_val = kInf;
  bool more = true;
  while (more) {
    Vec x(d);
    for (std::size_t i = 0; i < d; ++i)
      x[i] = lo[i] + (hi[i] - lo[i]) * idx[i] / static_cast<double>(g - 1);
    double v = f(x);
    ++res.evaluations;
    if (std::isinf(v) && v > 0) v = kInf;
    if (v < best_val || (v == best_val && (best.empty() || lex_less(x, best)))) {
      best_val = v;
      best = x;
    }
    more = false;
    for (std::size_t i = d; i-- > 0;) {
      if (++idx[i] < g) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
  }
  if (!std::isfinite(best_val))
    throw NonFiniteObjective("minimize_box: objective not finite anywhere on the grid");

  // Bounded Nelder-Mead seeded at the best grid cell.
  const double cell = 1.0 / static_cast<double>(g - 1);
  std::vector<Vec> simplex{best};
  for (std::size_t i = 0; i < d; ++i) {
    Vec v = best;
    const double step = (hi[i] - lo[i]) * cell * 0.5;
    v[i] = v[i] + step <= hi[i] ? v[i] + step : v[i] - step;
    simplex.push_back(clamp_box(v, lo, hi));
  }
  std::vector<double> fv(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    fv[i] = f(simplex[i]);
    ++res.evaluations;
  }
  for (int it = 0; it < settings.nelder_mead_iters; ++it) {
    // order
    std::vector<std::size_t> ord(simplex.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
      if (fv[a] != fv[b]) return fv[a] < fv[b];
      return lex_less(simplex[a], simplex[b]);
    });
    const std::size_t lo_i = ord.front(), hi_i = ord.back(), hi2_i = ord[ord.size() - 2];
    double diam = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      diam = std::max(diam, std::fabs(simplex[lo_i][i] - simplex[hi_i][i]));
    if (diam < settings.x_tol) break;
    Vec centroid(d, 0.0);
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (k == hi_i) continue;
      for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[k][i];
    }
    for (double& c : centroid) c /= static_cast<double>(d);
    auto try_point = [&](double coef) {
      Vec x(d);
      for (std::size_t i = 0; i < d; ++i)
        x[i] = centroid[i] + coef * (centroid[i] - simplex[hi_i][i]);
      return clamp_box(std::move(x), lo, hi);
    };
    const Vec xr = try_point(1.0);
    const double fr = f(xr);
    ++res.evaluations;
    if (fr < fv[lo_i]) {
      const Vec xe = try_point(2.0);
      const double fe = f(xe);
      ++res.evaluations;
      if (fe < fr) {
        simplex[hi_i] = xe;
        fv[hi_i] = fe;
      } else {
        simplex[hi_i] = xr;
        fv[hi_i] = fr;
      }
    } else if (fr < fv[hi2_i]) {
      simplex[hi_i] = xr;
      fv[hi_i] = fr;
    } else {
      const Vec xc = try_point(-0.5);
      const double fc = f(xc);
      ++res.evaluations;
      if (fc < fv[hi_i]) {
        simplex[hi_i] = xc;
        fv[hi_i] = fc;
      } else {
        for (std::size_t k = 0; k < simplex.size(); ++k) {
          if (k == lo_i) continue;
          for (std::size_t i = 0; i < d; ++i)
            simplex[k][i] = simplex[lo_i][i] + 0.5 * (simplex[k][i] - simplex[lo_i][i]);
          fv[k] = f(simplex[k]);
          ++res.evaluations;
        }
      }
    }
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < simplex.size(); ++i)
    if (fv[i] < fv[arg] || (fv[i] == fv[arg] && lex_less(simplex[i], simplex[arg]))) arg = i;
  Vec x = simplex[arg];
  double fx = fv[arg];

  coordinate_polish(f, x, fx, lo, hi, settings.polish_passes, res.evaluations);

  res.theta = x;
  res.value = fx;
  for (std::size_t i = 0; i < d; ++i) {
    const double span = hi[i] - lo[i];
    if (x[i] <= lo[i] + 1e-9 * span || x[i] >= hi[i] - 1e-9 * span) res.on_boundary = true;
  }
  return res;
}

MleResult mle_fit(const Vec& p_tilde, const std::function<Vec(const Vec&)>& family, const Vec& lo,
                  const Vec& hi, const FitSettings& settings) {
  double total = 0.0;
  for (double v : p_tilde) {
    if (v < 0.0) throw ConfigError("mle_fit: negative empirical frequency");
    total += v;
  }
  if (std::fabs(total - 1.0) > 1e-9) throw ConfigError("mle_fit: empirical pmf total != 1");

  const auto dep = instances::make_dependable_shannon(std::max<std::size_t>(p_tilde.size(), 2));
  instances::DependablePair data{p_tilde, Vec(p_tilde.size(), 1.0)};
  bool any_finite = false;
  auto objective = [&](const Vec& theta) {
    const Vec p = family(theta);
    if (p.size() != p_tilde.size())
      throw ConfigError("mle_fit: family pmf size does not match the data");
    instances::DependablePair model{p, Vec(p.size(), 0.0)};
    // rho_ca^u((p_theta, 0), (p~, 1)) = [[ model .+ data ]]
    try {
      const double v = dep.s.entropy(dep.s.dotplus(model, data));
      any_finite = true;
      return v;
    } catch (const SupportMismatch&) {
      return kInf;
    }
  };
  FitResult res;
  try {
    res = minimize_box(objective, lo, hi, settings);
  } catch (const NonFiniteObjective&) {
    throw SupportMismatch("mle_fit: the family never covers the support of p~");
  }
  if (!any_finite) throw SupportMismatch("mle_fit: the family never covers the support of p~");
  return MleResult{res.theta, res.value, res.on_boundary};
}

TichonovFitResult tichonov_fit(const instances::TichonovModel& model, double lambda,
                               const FitSettings& settings) {
  if (!(lambda > 0.0)) throw ConfigError("tichonov_fit: lambda must be > 0");
  TichonovFitResult out;
  out.beta_ridge = model.ridge_closed_form(lambda);
  const double a = instances::TichonovModel::equivalence_coefficient(lambda);
  // Symmetric box covering every admissible minimizer: |beta_j| <= |X^T y|_j.
  const std::size_t p = out.beta_ridge.size();
  const Vec c = model.xty();
  double span = 1.0;
  for (double v : c) span = std::max(span, 2.0 * std::fabs(v));
  Vec lo(p, -span), hi(p, span);
  auto objective = [&](const Vec& beta) { return model.rho_objective(beta, a); };
  const FitResult res = minimize_box(objective, lo, hi, settings);
  out.beta_rho = res.theta;
  for (std::size_t i = 0; i < p; ++i)
    out.max_abs_diff = std::max(out.max_abs_diff, std::fabs(out.beta_rho[i] - out.beta_ridge[i]));
  return out;
}

}  // namespace entalg::fit
