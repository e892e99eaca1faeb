#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <thread>
#include <vector>

namespace entalg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Every randomized routine seeds from this unless told otherwise.
inline constexpr uint64_t kDefaultSeed = 0x5eed0001u;

// Floating comparisons: relative tolerance with an absolute floor. Closed-form
// instances are exact to rounding; estimated ones configure more slack.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  bool close(double a, double b, double scale = 0.0) const {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    const double mag = std::max({std::fabs(a), std::fabs(b), std::fabs(scale)});
    return std::fabs(a - b) <= abs + rel * mag;
  }
  // x >= 0 up to tolerance at the given scale.
  bool nonneg(double x, double scale = 0.0) const {
    return x >= -(abs + rel * std::max(std::fabs(scale), 1.0));
  }
  bool is_zero(double x, double scale = 0.0) const { return close(x, 0.0, scale); }
};

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic per-case seed derivation: case i of a run seeded with `seed`
// always sees the same generator, independent of evaluation order. This is
// what makes sampled checks safely parallelizable.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  splitmix64(s);
  return splitmix64(s);
}

inline std::mt19937_64 make_rng(uint64_t seed, uint64_t index = 0) {
  return std::mt19937_64(derive_seed(seed, index));
}

// Index-chunked parallel map with deterministic, order-independent merge.
// `body(i)` must depend only on i (use make_rng(seed, i) inside).
template <typename R, typename Body, typename Merge>
R parallel_reduce_indexed(std::size_t n, R init, Body body, Merge merge,
                          std::size_t min_chunk = 2048) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (n < 2 * min_chunk || hw < 2) {
    R acc = init;
    for (std::size_t i = 0; i < n; ++i) acc = merge(std::move(acc), body(i));
    return acc;
  }
  const std::size_t chunks = std::min<std::size_t>(hw, (n + min_chunk - 1) / min_chunk);
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::future<R>> parts;
  parts.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = c * step;
    const std::size_t hi = std::min(n, lo + step);
    parts.push_back(std::async(std::launch::async, [lo, hi, &body, &merge, &init]() {
      R acc = init;
      for (std::size_t i = lo; i < hi; ++i) acc = merge(std::move(acc), body(i));
      return acc;
    }));
  }
  R acc = init;
  for (auto& p : parts) acc = merge(std::move(acc), p.get());
  return acc;
}

}  // namespace entalg
