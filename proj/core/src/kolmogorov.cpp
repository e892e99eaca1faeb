#include "entalg/kolmogorov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entalg::models {

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 128; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-14) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::size_t n1 = a.size(), n2 = b.size();
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < n1 && j < n2) {
    const double x = std::min(a[i], b[j]);
    while (i < n1 && a[i] <= x) ++i;
    while (j < n2 && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
  }
  const double ne = static_cast<double>(n1) * n2 / (n1 + n2);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  KsResult r;
  r.statistic = d;
  r.p_value = kolmogorov_q(lambda);
  r.n1 = n1;
  r.n2 = n2;
  return r;
}

}  // namespace entalg::models
