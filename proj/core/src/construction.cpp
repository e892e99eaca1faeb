#include "entalg/construction.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace entalg::construction {

namespace {

// prefix(t) = sum_{k=1}^{t} series[k-1]
double prefix(const KernelSpec& spec, int t, const char* who) {
  if (t < 0) throw DomainError(std::string(who) + ": negative prefix length");
  if (static_cast<std::size_t>(t) > spec.series.size())
    throw InsufficientSeries(std::string(who) + ": series has " +
                             std::to_string(spec.series.size()) + " terms, need " +
                             std::to_string(t));
  double s = 0.0;
  for (int k = 1; k <= t; ++k) s += spec.series[k - 1];
  return s;
}

// sum_{k=1}^{t} <k q z, q z>
double class_prefix(const KernelSpec& spec, int q, int t, const char* who) {
  double s = 0.0;
  for (int k = 1; k <= t; ++k) s += kernel_sums(spec, k * q, q);
  (void)who;
  return s;
}

double sup_over_relations(const KernelSpec& spec, int p, int depth, int sign) {
  double best = -kInf;
  for (int m = 1; m <= depth; ++m) {
    for (int n = 1; n <= depth; ++n) {
      const long long nq = static_cast<long long>(n) * p;
      if (nq % m != 0) continue;
      const int q = static_cast<int>(nq / m);
      if (q < 1) continue;
      // needs the series up to max(m q - 1 + q, n p - 1 + p) lattice steps
      if (static_cast<std::size_t>(m * q) > spec.series.size() ||
          static_cast<std::size_t>(n * p) > spec.series.size())
        continue;
      const double v = (static_cast<double>(sign) / n) *
                       (class_prefix(spec, q, m - 1, "consistency_M") -
                        class_prefix(spec, p, n - 1, "consistency_M"));
      best = std::max(best, v);
    }
  }
  if (best == -kInf) throw NoRelations("consistency_M: no relations within the series depth");
  return best;
}

}  // namespace

KernelSpec kernel_from_function(const std::function<double(int, int)>& k, std::size_t depth,
                                int sign) {
  KernelSpec spec;
  spec.sign = sign >= 0 ? +1 : -1;
  spec.series.reserve(depth);
  for (std::size_t i = 1; i <= depth; ++i)
    spec.series.push_back(k(static_cast<int>(i), 1));
  return spec;
}

double kernel_sums(const KernelSpec& spec, int i, int j) {
  if (i < 1 || j < 1) throw DomainError("kernel_sums: indices must be >= 1");
  return prefix(spec, i + j - 1, "kernel_sums") - prefix(spec, j - 1, "kernel_sums") -
         prefix(spec, i - 1, "kernel_sums");
}

std::pair<double, double> kernel_partial_sums(const KernelSpec& spec, int m, int i) {
  if (m < 1 || i < 1) throw DomainError("kernel_partial_sums: indices must be >= 1");
  double lhs = 0.0;
  for (int n = 1; n <= m - 1; ++n) lhs += kernel_sums(spec, n * i, i);
  const double rhs =
      prefix(spec, m * i - 1, "kernel_partial_sums") - m * prefix(spec, i - 1, "kernel_partial_sums");
  return {lhs, rhs};
}

ConsistencyResult consistency_M(const KernelSpec& spec, int base_index, int depth) {
  if (base_index < 1) throw DomainError("consistency_M: base index must be >= 1");
  if (depth < 4) throw DomainError("consistency_M: depth must be >= 4");
  ConsistencyResult out;
  for (int sign : {+1, -1}) {
    const double full = sup_over_relations(spec, base_index, depth, sign);
    const double half = sup_over_relations(spec, base_index, std::max(4, depth / 2), sign);
    const bool positive = full > 0.0;
    // A feasible sign has a finite supremum: the prefix estimates stabilize
    // instead of growing with the depth.
    const bool stable = !(half > 0.0 && full > 1.5 * half);
    if (sign > 0) {
      out.M_plus = full;
      out.plus_feasible = positive && stable;
    } else {
      out.M_minus = full;
      out.minus_feasible = positive && stable;
    }
  }
  return out;
}

double reconstruct_entropy(const KernelSpec& spec, int base_index, double base_entropy,
                           int target_index, int consistency_depth) {
  if (base_index < 1 || target_index < 1)
    throw DomainError("reconstruct_entropy: indices must be >= 1");
  const int p = base_index, q = target_index;

  // Guard the consistency requirement [[xi]] >= M_xi with the prefix
  // estimate (a lower bound for the true constant).
  try {
    const double m_hat = sup_over_relations(spec, p, consistency_depth, spec.sign);
    if (base_entropy < m_hat - 1e-12)
      throw BaseBelowM("reconstruct_entropy: base entropy " + std::to_string(base_entropy) +
                       " below the consistency constant estimate " + std::to_string(m_hat));
  } catch (const NoRelations&) {
    // Too shallow a series to estimate; the defining identity still applies.
  }

  const int g = std::gcd(p, q);
  const int m = p / g, n = q / g;
  const double e = spec.sign;
  const double value = (n * base_entropy + e * class_prefix(spec, p, n - 1, "reconstruct") -
                        e * class_prefix(spec, q, m - 1, "reconstruct")) /
                       m;
  return value;
}

std::vector<double> reconstruct_table(const KernelSpec& spec, int base_index,
                                      double base_entropy, const std::vector<int>& targets,
                                      int consistency_depth) {
  std::vector<double> out;
  out.reserve(targets.size());
  for (int q : targets)
    out.push_back(reconstruct_entropy(spec, base_index, base_entropy, q, consistency_depth));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string word_label(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<int> axis_vector(std::size_t rank, std::size_t axis, int count) {
  std::vector<int> v(rank, 0);
  v[axis] = count;
  return v;
}

}  // namespace

ExtensionResult extend_entropy(const LatticePresentation& pres, int box) {
  if (pres.rank < 1) throw DomainError("extend_entropy: rank must be >= 1");
  if (pres.base_entropies.size() != pres.rank)
    throw DomainError("extend_entropy: one base entropy per generator required");
  if (box < 1) throw DomainError("extend_entropy: box must be >= 1");
  ExtensionResult res;
  const double e = pres.sign;
  const Tolerance tol;

  // Per-class values [[k e_i]] along each axis by the one-generator identity.
  std::vector<std::vector<double>> axis_entropy(pres.rank);
  for (std::size_t i = 0; i < pres.rank; ++i) {
    axis_entropy[i].assign(box + 1, 0.0);
    double series_sum = 0.0;
    for (int k = 1; k <= box; ++k) {
      axis_entropy[i][k] = k * pres.base_entropies[i] + e * series_sum;
      series_sum += pres.kernel(axis_vector(pres.rank, i, k), axis_vector(pres.rank, i, 1));
    }
  }

  // Value of a word given as an ordered list of class blocks.
  auto word_value = [&](const std::vector<std::vector<int>>& blocks) {
    double acc = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      // locate the block's class and size
      double block_entropy = 0.0;
      for (std::size_t ax = 0; ax < pres.rank; ++ax)
        if (blocks[i][ax] > 0) block_entropy = axis_entropy[ax][blocks[i][ax]];
      acc += block_entropy;
      std::vector<int> suffix(pres.rank, 0);
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        for (std::size_t ax = 0; ax < pres.rank; ++ax) suffix[ax] += blocks[j][ax];
      bool suffix_empty = true;
      for (int v : suffix)
        if (v != 0) suffix_empty = false;
      if (!suffix_empty) acc += e * pres.kernel(blocks[i], suffix);
    }
    return acc;
  };

  auto blocks_of = [&](const std::vector<int>& v, bool reversed) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t ax = 0; ax < pres.rank; ++ax) {
      const std::size_t a = reversed ? pres.rank - 1 - ax : ax;
      if (v[a] > 0) blocks.push_back(axis_vector(pres.rank, a, v[a]));
    }
    return blocks;
  };

  // Enumerate the box and check the two word conditions.
  std::vector<int> v(pres.rank, 0);
  const auto advance = [&]() {
    for (std::size_t ax = 0; ax < pres.rank; ++ax) {
      if (++v[ax] <= box) return true;
      v[ax] = 0;
    }
    return false;
  };
  while (true) {
    bool all_zero = true;
    for (int x : v)
      if (x != 0) all_zero = false;
    if (!all_zero) {
      const auto fwd = blocks_of(v, false);
      const double value = word_value(fwd);
      const double value_rev = word_value(blocks_of(v, true));
      if (!tol.close(value, value_rev, std::max(1.0, std::fabs(value)))) {
        res.obstruction = {false, "a=b", {word_label(v)}, value, value_rev};
        return res;
      }
      // Finer decomposition: split the first block into unit steps.
      if (!fwd.empty() && fwd[0] != std::vector<int>(pres.rank, 0)) {
        std::vector<std::vector<int>> fine;
        for (std::size_t ax = 0; ax < pres.rank; ++ax)
          for (int k = 0; k < v[ax]; ++k) fine.push_back(axis_vector(pres.rank, ax, 1));
        const double value_fine = word_value(fine);
        if (!tol.close(value, value_fine, std::max(1.0, std::fabs(value)))) {
          res.obstruction = {false, "a=b", {word_label(v)}, value, value_fine};
          return res;
        }
      }
      if (value < -tol.abs - tol.rel * std::max(1.0, std::fabs(value))) {
        res.obstruction = {false, "a>0", {word_label(v)}, value, 0.0};
        return res;
      }
      res.points.push_back(v);
      res.entropy.push_back(value);
    }
    if (!advance()) break;
  }

  // Null elements of the kernel must be orthogonal to everything and closed
  // under the merge on the box.
  std::vector<std::size_t> null_idx;
  for (std::size_t i = 0; i < res.points.size(); ++i)
    if (std::fabs(pres.kernel(res.points[i], res.points[i])) <= tol.abs) null_idx.push_back(i);
  for (std::size_t zi : null_idx) {
    for (std::size_t j = 0; j < res.points.size(); ++j) {
      if (std::fabs(pres.kernel(res.points[j], res.points[zi])) > tol.abs) {
        res.obstruction = {false,
                           "Z-orthogonality",
                           {word_label(res.points[j]), word_label(res.points[zi])},
                           pres.kernel(res.points[j], res.points[zi]),
                           0.0};
        return res;
      }
    }
    for (std::size_t zj : null_idx) {
      std::vector<int> sum(pres.rank, 0);
      bool inside = true;
      for (std::size_t ax = 0; ax < pres.rank; ++ax) {
        sum[ax] = res.points[zi][ax] + res.points[zj][ax];
        if (sum[ax] > box) inside = false;
      }
      if (inside && std::fabs(pres.kernel(sum, sum)) > tol.abs) {
        res.obstruction = {false,
                           "Z-closure",
                           {word_label(res.points[zi]), word_label(res.points[zj])},
                           pres.kernel(sum, sum),
                           0.0};
        return res;
      }
    }
  }
  return res;
}

nlohmann::json to_json(const ObstructionReport& r) {
  nlohmann::json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["condition"] = r.condition;
    j["witness"] = r.witness;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  return j;
}

}  // namespace entalg::construction
