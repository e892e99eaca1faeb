#pragma once

#include <map>
#include <utility>

#include "entalg/instances/common.hpp"

namespace entalg::instances {

// Joint pmf of two discrete variables; margins derived from row/column sums.
struct JointTable {
  std::vector<Vec> p;  // p[i][j] >= 0, total 1

  void validate() const {
    if (p.empty() || p[0].empty()) throw ConfigError("joint table: empty");
    double total = 0.0;
    const std::size_t cols = p[0].size();
    for (const auto& row : p) {
      if (row.size() != cols) throw ConfigError("joint table: ragged rows");
      for (double v : row) {
        if (v < 0.0) throw ConfigError("joint table: negative entry");
        total += v;
      }
    }
    if (std::fabs(total - 1.0) > 1e-12) throw ConfigError("joint table: total != 1");
  }

  Vec margin_x() const {
    Vec m(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (double v : p[i]) m[i] += v;
    return m;
  }
  Vec margin_y() const {
    Vec m(p[0].size(), 0.0);
    for (const auto& row : p)
      for (std::size_t j = 0; j < row.size(); ++j) m[j] += row[j];
    return m;
  }
};

// Random variables over the finite probability space induced by a joint
// table (or any weighted atom list). An element is a labelling of the atoms;
// its entropy is the Shannon entropy of the induced pmf, and dotplus forms
// the joint variable. <X,Y>_2 = I(X,Y), rho_ca = variation of information.
struct MutualInformation {
  using Labels = std::vector<int>;

  EntropyStructure<Labels> s;
  ComparisonProfile profile;
  Vec atom_weights;
  Labels x_var;  // coordinate projections of the joint table, when built from one
  Labels y_var;

  double entropy_of(const Labels& z) const { return s.entropy(z); }
};

namespace detail_mi {

// Canonical relabelling by order of first appearance keeps joint labels
// compact under repeated merges.
inline std::vector<int> canonical(const std::vector<int>& z) {
  std::map<int, int> seen;
  std::vector<int> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto [it, inserted] = seen.emplace(z[i], static_cast<int>(seen.size()));
    out[i] = it->second;
  }
  return out;
}

inline double label_entropy(const std::vector<int>& z, const Vec& w) {
  std::map<int, double> pmf;
  for (std::size_t i = 0; i < z.size(); ++i) pmf[z[i]] += w[i];
  double h = 0.0;
  for (const auto& [_, p] : pmf)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

}  // namespace detail_mi

inline MutualInformation make_mutual_information_space(Vec atom_weights) {
  double total = 0.0;
  for (double w : atom_weights) {
    if (w < 0.0) throw ConfigError("mutual_information: negative atom weight");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-9) throw ConfigError("mutual_information: weights must sum to 1");
  MutualInformation inst;
  inst.atom_weights = std::move(atom_weights);
  auto& s = inst.s;
  const std::size_t n = inst.atom_weights.size();
  s.name = "mutual_information(atoms=" + std::to_string(n) + ")";
  s.entropy = [w = inst.atom_weights](const std::vector<int>& z) {
    return detail_mi::label_entropy(z, w);
  };
  s.dotplus = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> pair(x.size());
    int k = 0;
    std::map<std::pair<int, int>, int> code;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto [it, inserted] = code.emplace(std::make_pair(x[i], y[i]), k);
      if (inserted) ++k;
      pair[i] = it->second;
    }
    return pair;
  };
  s.label = [](const std::vector<int>& z) {
    std::string out = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(z[i]);
    }
    return out + ")";
  };
  s.is_deterministic = [w = inst.atom_weights](const std::vector<int>& z) {
    int lab = -1;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (w[i] <= 0.0) continue;
      if (lab == -1) lab = z[i];
      if (z[i] != lab) return false;
    }
    return true;
  };
  s.deterministic_element = std::vector<int>(n, 0);
  s.sample = [n](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kd(1, 3);
    const int k = kd(rng);
    std::vector<int> z(n);
    std::uniform_int_distribution<int> ld(0, k - 1);
    for (auto& v : z) v = ld(rng);
    return detail_mi::canonical(z);
  };
  inst.profile = make_profile(0.5, 1.0, -1);
  return inst;
}

inline MutualInformation make_mutual_information(const JointTable& joint) {
  joint.validate();
  Vec w;
  std::vector<int> xs, ys;
  for (std::size_t i = 0; i < joint.p.size(); ++i)
    for (std::size_t j = 0; j < joint.p[i].size(); ++j) {
      w.push_back(joint.p[i][j]);
      xs.push_back(static_cast<int>(i));
      ys.push_back(static_cast<int>(j));
    }
  MutualInformation inst = make_mutual_information_space(std::move(w));
  inst.x_var = std::move(xs);
  inst.y_var = std::move(ys);
  return inst;
}

// Direct-sum mutual information of a joint table (oracle-style evaluation).
inline double mutual_information_direct(const JointTable& joint) {
  const Vec px = joint.margin_x();
  const Vec py = joint.margin_y();
  double acc = 0.0;
  for (std::size_t i = 0; i < joint.p.size(); ++i)
    for (std::size_t j = 0; j < joint.p[i].size(); ++j) {
      const double pij = joint.p[i][j];
      if (pij > 0.0) acc += pij * std::log(pij / (px[i] * py[j]));
    }
  return acc;
}

}  // namespace entalg::instances
