#pragma once

#include <vector>

namespace entalg::models {

// Survival function of the Kolmogorov distribution,
// Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

struct KsResult {
  double statistic = 0.0;  // sup |F1 - F2|
  double p_value = 1.0;
  std::size_t n1 = 0, n2 = 0;
};

// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
// Q((sqrt(ne) + 0.12 + 0.11/sqrt(ne)) D), ne = n1 n2 / (n1 + n2).
// Inputs are consumed by value and sorted internally.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace entalg::models
