#pragma once

#include "entalg/instances/common.hpp"

namespace entalg::instances {

// Concatenation semigroup of discrete distributions: merging two independent
// sources extends the alphabet to pairs, so the merge is the product pmf and
// the Shannon entropy is additive across it.
struct ShannonConcat {
  EntropyStructure<Vec> s;
  std::size_t product_cap = 1u << 16;

  // p ^ n under the concrete merge.
  Vec power(const Vec& p, int n) const {
    Vec acc{1.0};
    for (int i = 0; i < n; ++i) {
      const Merged<Vec> m = s.circ(acc, p);
      acc = std::get<Vec>(m);
    }
    return acc;
  }
};

inline Vec product_pmf(const Vec& p, const Vec& q) {
  Vec r;
  r.reserve(p.size() * q.size());
  for (double a : p)
    for (double b : q) r.push_back(a * b);
  return r;
}

inline ShannonConcat make_shannon_concat(std::size_t product_cap = 1u << 16) {
  ShannonConcat inst;
  inst.product_cap = product_cap;
  auto& s = inst.s;
  s.name = "shannon_concat";
  s.entropy = [](const Vec& p) { return shannon(p); };
  s.circ = [cap = product_cap](const Vec& p, const Vec& q) -> Merged<Vec> {
    if (p.size() * q.size() > cap) return FormalPair<Vec>{p, q};
    return product_pmf(p, q);
  };
  s.label = vec_label;
  s.is_deterministic = [](const Vec& p) {
    for (double v : p)
      if (v != 0.0 && v != 1.0) return false;
    return true;
  };
  s.sample = [](std::mt19937_64& rng) { return random_pmf(rng); };
  return inst;
}

// A source with per-letter reliabilities.
struct DependablePair {
  Vec p;  // pmf
  Vec q;  // reliabilities >= 0; all-zero is the flagged degenerate direction

  void validate() const {
    if (p.empty() || p.size() != q.size())
      throw ConfigError("dependable pair: p and q must have equal positive length");
    double total = 0.0;
    for (double v : p) {
      if (v < 0.0) throw ConfigError("dependable pair: negative probability");
      total += v;
    }
    if (std::fabs(total - 1.0) > 1e-9) throw ConfigError("dependable pair: pmf total != 1");
    for (double v : q)
      if (v < 0.0) throw ConfigError("dependable pair: negative reliability");
  }
};

// [[(p,q)]] = -sum q_x p_x log p_x / sum q_x p_x. The value depends only on
// the shape of q; the all-zero q is flagged with entropy 0.
inline double dependable_entropy(const DependablePair& e) {
  double w = 0.0, acc = 0.0;
  bool q_all_zero = true;
  for (std::size_t i = 0; i < e.p.size(); ++i) {
    if (e.q[i] != 0.0) q_all_zero = false;
    const double m = e.q[i] * e.p[i];
    if (m > 0.0) {
      w += m;
      acc -= m * std::log(e.p[i]);
    }
  }
  if (w <= 0.0) {
    if (q_all_zero) return 0.0;
    throw ZeroReliability("dependable pair: sum q_x p_x = 0 with q not flagged zero");
  }
  return acc / w;
}

// Updating model (p, q) by data (p~, q~): the reliability mass of the data is
// transported onto the model support.
inline DependablePair dependable_update(const DependablePair& a, const DependablePair& b) {
  DependablePair out;
  out.p = a.p;
  out.q = a.q;
  for (std::size_t i = 0; i < a.p.size(); ++i) {
    const double mass = b.q[i] * b.p[i];
    if (mass == 0.0) continue;
    if (a.p[i] <= 0.0)
      throw SupportMismatch("dependable update: data mass outside the model support");
    out.q[i] += mass / a.p[i];
  }
  return out;
}

struct DependableShannon {
  EntropyStructure<DependablePair> s;
  ComparisonProfile profile;
  std::size_t alphabet = 0;
};

inline std::string dependable_label(const DependablePair& e) {
  return "(p=" + vec_label(e.p) + ",q=" + vec_label(e.q) + ")";
}

inline DependableShannon make_dependable_shannon(std::size_t alphabet) {
  if (alphabet < 2) throw ConfigError("dependable_shannon: alphabet must have >= 2 letters");
  DependableShannon inst;
  inst.alphabet = alphabet;
  auto& s = inst.s;
  s.name = "dependable_shannon(m=" + std::to_string(alphabet) + ")";
  s.entropy = [](const DependablePair& e) { return dependable_entropy(e); };
  s.dotplus = [](const DependablePair& a, const DependablePair& b) {
    return dependable_update(a, b);
  };
  s.circ = [](const DependablePair& a, const DependablePair& b) -> Merged<DependablePair> {
    DependablePair out;
    out.p = product_pmf(a.p, b.p);
    out.q.reserve(a.q.size() * b.q.size());
    for (double qa : a.q)
      for (double qb : b.q) out.q.push_back(qa * qb);
    return out;
  };
  s.label = dependable_label;
  s.is_zero = [tol = s.tol](const DependablePair& e) {
    return dependable_entropy(e) <= tol.abs;
  };
  s.is_deterministic = [](const DependablePair& e) {
    for (double v : e.q)
      if (v != 0.0) return false;
    return true;
  };
  {
    DependablePair eps;
    eps.p = Vec(alphabet, 1.0 / static_cast<double>(alphabet));
    eps.q = Vec(alphabet, 0.0);
    s.deterministic_element = eps;
  }
  // Zero-reliability pairs are right-neutral; the left identity fails in
  // general and is replaced by the idempotence law [[x .+ x]] = [[x]].
  s.dotplus_left_neutral = false;
  s.dotplus_idempotent = true;
  s.sample = [alphabet](std::mt19937_64& rng) {
    DependablePair e;
    e.p = random_pmf(rng, alphabet, alphabet);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    e.q = Vec(alphabet);
    for (double& v : e.q) v = u(rng);
    return e;
  };
  inst.profile = make_profile(0.0, kInf, -1);
  return inst;
}

// Restricted model/data sub-structure: models are (p, 0), data are (p~, 1).
// The comparability map is identically zero on the mixed diagonal and the
// sign is set to +1, making <p, p~>_a the Kullback-Leibler divergence
// d_KL(p~, p). With m_G = 1 the divergence also appears as rho_infty.
struct KlStructure {
  EntropyStructure<DependablePair> s;
  ComparisonProfile profile;
  std::size_t alphabet = 0;

  DependablePair model(const Vec& p) const {
    DependablePair e{p, Vec(p.size(), 0.0)};
    e.validate();
    return e;
  }
  DependablePair data(const Vec& p) const {
    DependablePair e{p, Vec(p.size(), 1.0)};
    e.validate();
    return e;
  }
  // <model(p), data(p~)>_a with sign +1.
  double divergence(const Vec& p, const Vec& p_tilde) const {
    const DependablePair m = model(p), d = data(p_tilde);
    return s.entropy(s.dotplus(m, d)) - s.entropy(m) - s.entropy(d);
  }
};

inline KlStructure make_kl_structure(std::size_t alphabet) {
  KlStructure inst;
  DependableShannon base = make_dependable_shannon(alphabet);
  inst.alphabet = alphabet;
  inst.s = base.s;
  inst.s.name = "kl_structure(m=" + std::to_string(alphabet) + ")";
  // Singles range over models; comparison pairs are (model, data).
  inst.s.sample = [alphabet](std::mt19937_64& rng) {
    DependablePair e;
    e.p = random_pmf(rng, alphabet, alphabet);
    e.q = Vec(alphabet, 0.0);
    return e;
  };
  inst.s.sample_pair = [alphabet](std::mt19937_64& rng) {
    DependablePair m, d;
    m.p = random_pmf(rng, alphabet, alphabet);
    m.q = Vec(alphabet, 0.0);
    d.p = random_pmf(rng, alphabet, alphabet);
    d.q = Vec(alphabet, 1.0);
    return std::make_pair(m, d);
  };
  inst.profile = make_profile(1.0, kInf, +1, /*undetermined=*/true);
  return inst;
}

// Direct-sum Kullback-Leibler divergence (oracle-style evaluation).
inline double kl_divergence(const Vec& p_tilde, const Vec& p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p_tilde.size(); ++i) {
    if (p_tilde[i] <= 0.0) continue;
    if (p[i] <= 0.0) throw SupportMismatch("kl_divergence: support of p~ not within p");
    acc += p_tilde[i] * std::log(p_tilde[i] / p[i]);
  }
  return acc;
}

}  // namespace entalg::instances
