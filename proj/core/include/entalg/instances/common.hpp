#pragma once

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entalg/profile.hpp"
#include "entalg/structure.hpp"

namespace entalg::instances {

using Vec = std::vector<double>;

inline std::string vec_label(const Vec& v) {
  std::ostringstream os;
  os.precision(12);
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
  return os.str();
}

inline double squared_norm(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec vec_neg(const Vec& a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

// Shannon entropy of a pmf in nats; 0 log 0 = 0.
inline double shannon(const Vec& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

inline Vec random_pmf(std::mt19937_64& rng, std::size_t min_size = 2,
                      std::size_t max_size = 5) {
  std::uniform_int_distribution<std::size_t> size_d(min_size, max_size);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Vec p(size_d(rng));
  double total = 0.0;
  for (double& x : p) {
    x = u(rng);
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t d, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec v(d);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace entalg::instances
