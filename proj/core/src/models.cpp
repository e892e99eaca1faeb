#include "entalg/models.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

namespace entalg::models {

Family family_from_string(const std::string& name) {
  if (name == "stable") return Family::kStable;
  if (name == "max_stable") return Family::kMaxStable;
  if (name == "min_stable") return Family::kMinStable;
  throw ConfigError("unknown family '" + name + "'");
}

const char* to_string(Family f) {
  switch (f) {
    case Family::kStable: return "stable";
    case Family::kMaxStable: return "max_stable";
    case Family::kMinStable: return "min_stable";
  }
  return "?";
}

void ModelSpec::validate() const {
  if (family == Family::kStable) {
    if (!(alpha > 0.0 && alpha <= 2.0))
      throw ConfigError("stable model: alpha must lie in (0, 2]");
  } else if (!(alpha > 0.0)) {
    throw ConfigError("extreme model: alpha must be > 0");
  }
  if (!(base_scale > 0.0)) throw ConfigError("model: base scale must be > 0");
}

double ModelSpec::merge(double x, double y) const {
  switch (family) {
    case Family::kStable: return x + y;
    case Family::kMaxStable: return std::max(x, y);
    case Family::kMinStable: return std::min(x, y);
  }
  return x + y;
}

double sample_base(const ModelSpec& model, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (model.family) {
    case Family::kStable: {
      // Chambers-Mallows-Stuck for the symmetric case.
      const double u = (unit(rng) - 0.5) * std::numbers::pi;  // U(-pi/2, pi/2)
      double w;
      do {
        w = -std::log(1.0 - unit(rng));
      } while (w <= 0.0);
      const double a = model.alpha;
      if (a == 1.0) return model.base_scale * std::tan(u);
      const double x = std::sin(a * u) / std::pow(std::cos(u), 1.0 / a) *
                       std::pow(std::cos(u - a * u) / w, (1.0 - a) / a);
      return model.base_scale * x;
    }
    case Family::kMaxStable: {
      // Frechet(alpha, lambda): x = lambda (-log u)^(-1/alpha)
      const double u = std::max(unit(rng), 1e-300);
      return model.base_scale * std::pow(-std::log(u), -1.0 / model.alpha);
    }
    case Family::kMinStable: {
      // Psi_{alpha,lambda}(x) = exp(-(-lambda x)^alpha) on x <= 0:
      // x = -(-log u)^(1/alpha) / lambda
      const double u = std::max(unit(rng), 1e-300);
      return -std::pow(-std::log(u), 1.0 / model.alpha) / model.base_scale;
    }
  }
  return 0.0;
}

std::vector<double> sample(const ModelSpec& model, double xi, std::size_t n, uint64_t seed,
                           uint64_t stream) {
  model.validate();
  if (n < 1) throw ConfigError("sample: n must be >= 1");
  if (model.family != Family::kStable && xi < 0.0)
    throw ConfigError("sample: negative scale on a [0,inf) carrier");
  std::vector<double> out(n);
  auto rng = make_rng(seed, stream);
  for (auto& x : out) x = xi * sample_base(model, rng);
  return out;
}

double frechet_cdf(double x, double alpha, double lambda) {
  if (x <= 0.0) return 0.0;
  return std::exp(-std::pow(lambda / x, alpha));
}

double weibull_cdf(double x, double alpha, double lambda) {
  if (x >= 0.0) return 1.0;
  return std::exp(-std::pow(-lambda * x, alpha));
}

double cauchy_cdf(double x, double scale) {
  return 0.5 + std::atan(x / scale) / std::numbers::pi;
}

MergeTestResult verify_merge_law(const ModelSpec& model, double xi, double nu, std::size_t n,
                                 double level, uint64_t seed) {
  model.validate();
  MergeTestResult r;
  r.xi = xi;
  r.nu = nu;
  r.n = n;
  r.level = level;
  r.seed = seed;
  std::vector<double> xs = sample(model, xi, n, seed, 1);
  const std::vector<double> ys = sample(model, nu, n, seed, 2);
  for (std::size_t i = 0; i < n; ++i) xs[i] = model.merge(xs[i], ys[i]);
  const std::vector<double> ref = sample(model, model.circ(xi, nu), n, seed, 3);
  const KsResult ks = ks_two_sample(std::move(xs), ref);
  r.statistic = ks.statistic;
  r.p_value = ks.p_value;
  r.pass = r.p_value >= level;
  return r;
}

CalibrationResult verify_entropy_calibration(const ModelSpec& model, double xi, std::size_t n,
                                             uint64_t seed) {
  model.validate();
  CalibrationResult r;
  r.xi = xi;
  r.n = n;
  r.expected = model.entropy(xi);
  const std::vector<double> xs = sample(model, xi, n, seed, 1);
  switch (model.family) {
    case Family::kStable: {
      if (model.alpha != 2.0)
        throw ConfigError("calibration: the stable estimator is registered for alpha = 2");
      double var = 0.0;
      for (double x : xs) var += x * x;  // the base law is centered
      var /= static_cast<double>(n);
      r.ratio = var / (2.0 * model.base_scale * model.base_scale);
      // Var of the sample second moment of N(0, v) is 2 v^2 / n.
      r.se = r.ratio * std::sqrt(2.0 / static_cast<double>(n));
      // [[xi]] = [[-xi]] on the real carrier: the sampler only sees |xi|.
      r.sign_invariant = model.entropy(xi) == model.entropy(-xi);
      break;
    }
    case Family::kMaxStable: {
      // lambda^alpha MLE: x^-alpha ~ Exp(lambda^alpha), so
      // hat(lambda^alpha) = n / sum x_i^-alpha.
      double acc = 0.0;
      for (double x : xs) acc += std::pow(x, -model.alpha);
      const double lam_alpha = static_cast<double>(n) / acc;
      r.ratio = lam_alpha / std::pow(model.base_scale, model.alpha);
      r.se = r.ratio / std::sqrt(static_cast<double>(n));
      break;
    }
    case Family::kMinStable: {
      // (-x)^alpha scales like lambda^-alpha; the ratio inverts.
      double acc = 0.0;
      for (double x : xs) acc += std::pow(-x, model.alpha);
      const double inv = acc / static_cast<double>(n);  // ~ (xi / lambda)^alpha
      r.ratio = inv * std::pow(model.base_scale, model.alpha);
      r.se = r.ratio / std::sqrt(static_cast<double>(n));
      break;
    }
  }
  r.pass = std::fabs(r.ratio - r.expected) <= 3.0 * r.se;
  return r;
}

nlohmann::json to_json(const MergeTestResult& r) {
  return nlohmann::json{{"xi", r.xi},           {"nu", r.nu},
                        {"n", r.n},             {"statistic", r.statistic},
                        {"p_value", r.p_value}, {"level", r.level},
                        {"pass", r.pass},       {"seed", r.seed}};
}

nlohmann::json to_json(const CalibrationResult& r) {
  return nlohmann::json{{"xi", r.xi},        {"n", r.n},
                        {"ratio", r.ratio},  {"expected", r.expected},
                        {"se", r.se},        {"pass", r.pass},
                        {"sign_invariant", r.sign_invariant}};
}

ModelSpec model_from_json(const nlohmann::json& j) {
  ModelSpec m;
  m.family = family_from_string(j.at("family").get<std::string>());
  m.alpha = j.at("alpha").get<double>();
  m.base_scale = j.value("scale", 1.0);
  m.seed = j.value("seed", kDefaultSeed);
  m.validate();
  return m;
}

}  // namespace entalg::models
