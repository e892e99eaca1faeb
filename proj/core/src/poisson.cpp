#include "entalg/instances/poisson.hpp"

#include <vector>

namespace entalg::instances {

namespace {

// Truncation index with tail mass below 1e-12.
int truncation(double mean) {
  return std::max(60, static_cast<int>(std::ceil(mean + 40.0 * std::sqrt(std::max(mean, 1.0)))));
}

std::vector<double> poisson_pmf(double lambda, int n) {
  std::vector<double> p(n + 1, 0.0);
  if (lambda <= 0.0) {
    p[0] = 1.0;
    return p;
  }
  p[0] = std::exp(-lambda);
  for (int k = 1; k <= n; ++k) p[k] = p[k - 1] * lambda / k;
  return p;
}

}  // namespace

double poisson_shannon_entropy(double lambda) {
  if (lambda < 0.0) throw ConfigError("poisson entropy: lambda < 0");
  if (lambda == 0.0) return 0.0;
  const int n = truncation(lambda);
  const std::vector<double> p = poisson_pmf(lambda, n);
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

double poisson_bivariate_shannon_entropy(double lambda, double mu, double nu) {
  if (nu > std::min(lambda, mu) + 1e-12)
    throw ConfigError("poisson entropy: coupling exceeds a marginal intensity");
  const int n = truncation(std::max(lambda, mu));
  const std::vector<double> pz = poisson_pmf(nu, n);
  const std::vector<double> px = poisson_pmf(lambda - nu, n);
  const std::vector<double> py = poisson_pmf(mu - nu, n);
  // P(X = i, Y = j) = sum_z pz[z] px[i-z] py[j-z]
  std::vector<std::vector<double>> joint(n + 1, std::vector<double>(n + 1, 0.0));
  for (int z = 0; z <= n; ++z) {
    if (pz[z] <= 0.0) continue;
    for (int i = z; i <= n; ++i) {
      const double f = pz[z] * px[i - z];
      if (f <= 0.0) continue;
      for (int j = z; j <= n; ++j) joint[i][j] += f * py[j - z];
    }
  }
  double h = 0.0;
  for (const auto& row : joint)
    for (double v : row)
      if (v > 0.0) h -= v * std::log(v);
  return h;
}

}  // namespace entalg::instances
