#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "entalg/errors.hpp"
#include "entalg/numeric.hpp"

namespace entalg::construction {

// A symmetric kernel on the one-generator rational lattice {k z : k >= 1},
// presented by the series <k z, z>. All commensurability relations are
// implicit in the lattice: m (q z) = n (p z) whenever m q = n p.
struct KernelSpec {
  std::vector<double> series;  // series[k-1] = <k z, z>
  int sign = +1;               // the construction sign e
  std::vector<std::pair<int, std::string>> targets;  // lattice index -> label (CLI use)

  std::size_t depth() const { return series.size(); }
};

// Generates the series from a closed-form kernel on lattice indices.
KernelSpec kernel_from_function(const std::function<double(int, int)>& k, std::size_t depth,
                                int sign);

// <i z, j z> by the telescoping identity from the series.
double kernel_sums(const KernelSpec& spec, int i, int j);

// Both sides of the partial-sum identity
//   sum_{n=1}^{m-1} <n i z, i z> = sum_{k=1}^{mi-1} <k z, z> - m sum_{k=1}^{i-1} <k z, z>,
// for cross-checking.
std::pair<double, double> kernel_partial_sums(const KernelSpec& spec, int m, int i);

struct ConsistencyResult {
  double M_plus = 0.0;   // supremum estimate for e = +1
  double M_minus = 0.0;  // supremum estimate for e = -1
  bool plus_feasible = false;
  bool minus_feasible = false;

  double value(int sign) const { return sign >= 0 ? M_plus : M_minus; }
  bool feasible(int sign) const { return sign >= 0 ? plus_feasible : minus_feasible; }
};

// The consistency constant M_xi for base xi = p z: supremum over relations
// m (q z) = n (p z) with m, n <= depth of (e/n)(sum_{k<m} <k eta, eta> -
// sum_{k<n} <k xi, xi>). Estimates are suprema over a finite prefix, so they
// are lower bounds; a sign whose supremum keeps growing across depths is
// flagged infeasible.
ConsistencyResult consistency_M(const KernelSpec& spec, int base_index, int depth);

// [[eta]] for eta = q z from base xi = p z with [[xi]] = base_entropy >= M_xi:
//   m [[eta]] = n [[xi]] + e sum_{k<n} <k xi, xi> - e sum_{k<m} <k eta, eta>
// with (m, n) = (p, q) / gcd(p, q).
double reconstruct_entropy(const KernelSpec& spec, int base_index, double base_entropy,
                           int target_index, int consistency_depth = 16);

// Reconstruction over a list of targets (shared consistency check).
std::vector<double> reconstruct_table(const KernelSpec& spec, int base_index,
                                      double base_entropy, const std::vector<int>& targets,
                                      int consistency_depth = 16);

// ---------------------------------------------------------------------------
// Finitely generated extension
// ---------------------------------------------------------------------------

// A commutative presentation on Z^rank with a symmetric kernel evaluated on
// lattice vectors. Per-class bases give [[xi_B]] for the unit generators.
struct LatticePresentation {
  std::size_t rank = 0;
  std::function<double(const std::vector<int>&, const std::vector<int>&)> kernel;
  std::vector<double> base_entropies;  // [[e_i]], one per generator
  int sign = +1;
};

struct ObstructionReport {
  bool ok = true;
  std::string condition;               // "a>0" | "a=b" | "Z-closure" | "Z-orthogonality"
  std::vector<std::string> witness;    // offending words
  double lhs = 0.0, rhs = 0.0;
};

struct ExtensionResult {
  ObstructionReport obstruction;       // ok == true when the table is valid
  std::vector<std::vector<int>> points;
  std::vector<double> entropy;
};

// Extends the per-class reconstructions across the generated semigroup over
// the box {1..box}^rank (plus the axes), checking the word-consistency and
// nonnegativity conditions on the finite presentation.
ExtensionResult extend_entropy(const LatticePresentation& pres, int box);

nlohmann::json to_json(const ObstructionReport& r);

}  // namespace entalg::construction
