#pragma once

#include "entalg/instances/euclidean.hpp"

namespace entalg::instances {

// Linear-model carrier {X beta} inside the squared-norm structure on R^n,
// for an orthonormal design. Minimizing rho_a(y, X beta) at a = -1/(1+l)
// is the ridge problem with penalty l; a = -1 is least squares.
struct TichonovModel {
  EntropyStructure<Vec> s;  // ambient squared-norm structure on R^n
  ComparisonProfile profile;
  std::vector<Vec> X;  // n rows, p columns
  Vec y;

  std::size_t n_rows() const { return X.size(); }
  std::size_t n_cols() const { return X.empty() ? 0 : X[0].size(); }

  Vec predict(const Vec& beta) const {
    Vec out(n_rows(), 0.0);
    for (std::size_t i = 0; i < n_rows(); ++i)
      for (std::size_t j = 0; j < beta.size(); ++j) out[i] += X[i][j] * beta[j];
    return out;
  }

  Vec xty() const {
    Vec out(n_cols(), 0.0);
    for (std::size_t i = 0; i < n_rows(); ++i)
      for (std::size_t j = 0; j < n_cols(); ++j) out[j] += X[i][j] * y[i];
    return out;
  }

  static double equivalence_coefficient(double lambda) { return -1.0 / (1.0 + lambda); }

  // Closed-form ridge solution for the orthonormal design.
  Vec ridge_closed_form(double lambda) const {
    Vec beta = xty();
    for (double& b : beta) b /= (1.0 + lambda);
    return beta;
  }

  // a [[y + X beta]] + (1 - a)([[y]] + [[X beta]])
  double rho_objective(const Vec& beta, double a) const {
    const Vec xb = predict(beta);
    return a * squared_norm(vec_add(y, xb)) + (1.0 - a) * (squared_norm(y) + squared_norm(xb));
  }
};

inline TichonovModel make_tichonov_model(std::vector<Vec> X, Vec y, double ortho_tol = 1e-9) {
  if (X.empty() || X[0].empty()) throw ConfigError("tichonov: empty design");
  if (X.size() != y.size()) throw ConfigError("tichonov: row count != response length");
  const std::size_t p = X[0].size();
  for (const auto& row : X)
    if (row.size() != p) throw ConfigError("tichonov: ragged design");
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = j; k < p; ++k) {
      double g = 0.0;
      for (std::size_t i = 0; i < X.size(); ++i) g += X[i][j] * X[i][k];
      const double want = j == k ? 1.0 : 0.0;
      if (std::fabs(g - want) > ortho_tol)
        throw DesignNotOrthogonal("tichonov: X^T X != I at (" + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
    }
  }
  TichonovModel inst;
  Euclidean ambient = make_euclidean(static_cast<int>(X.size()));
  inst.s = ambient.s;
  inst.s.name = "tichonov(n=" + std::to_string(X.size()) + ",p=" + std::to_string(p) + ")";
  inst.profile = ambient.profile;
  inst.X = std::move(X);
  inst.y = std::move(y);
  return inst;
}

}  // namespace entalg::instances
